"""Registry of the diagram identities checked by the verification suites.

Each identity is transcribed exactly once, as a pair of terms over a
symbolic carrier ``A`` (or ``R`` for the Frobenius family), and is reused
by every checker.  Identity ids are stable across releases; the statement
string spells the identity out in linear notation so a failing report is
self-contained.

Conventions.  Terms read top to bottom; ``c`` is the braiding (left over
right), ``c~`` its inverse (right over left); ``em = eps . mu`` and
``de = delta . eta`` are the convolution unit gadgets.
"""

from __future__ import annotations

from weakhopf.diagram import Gen, Id, Braid, BraidInv, seq, par


class Identity:
    def __init__(self, ident, statement, lhs, rhs):
        self.id = ident
        self.statement = statement
        self.lhs = lhs
        self.rhs = rhs

    def __repr__(self):
        return "Identity(%s)" % self.id


# shorthands over the carrier A
MU = Gen("mu")
ETA = Gen("eta")
DELTA = Gen("delta")
EPS = Gen("eps")
S = Gen("s")
T = Gen("t")
R = Gen("r")
NU = Gen("nu")
IA = Id("A")
IU = Id(())
C = Braid("A", "A")
CI = BraidInv("A", "A")
EM = seq(MU, EPS)          # eps . mu  : A(x)A -> I
DE = seq(ETA, DELTA)       # delta . eta : I -> A(x)A


def _reg(table, ident, statement, lhs, rhs):
    table[ident] = Identity(ident, statement, lhs, rhs)


# -- monoid / comonoid ------------------------------------------------------

MONOID = {}
_reg(MONOID, "m.assoc", "mu(mu(x)1) = mu(1(x)mu)",
     seq(par(MU, IA), MU), seq(par(IA, MU), MU))
_reg(MONOID, "m.unit.l", "mu(eta(x)1) = 1",
     seq(par(ETA, IA), MU), IA)
_reg(MONOID, "m.unit.r", "mu(1(x)eta) = 1",
     seq(par(IA, ETA), MU), IA)

COMONOID = {}
_reg(COMONOID, "c.coassoc", "(delta(x)1)delta = (1(x)delta)delta",
     seq(DELTA, par(DELTA, IA)), seq(DELTA, par(IA, DELTA)))
_reg(COMONOID, "c.counit.l", "(eps(x)1)delta = 1",
     seq(DELTA, par(EPS, IA)), IA)
_reg(COMONOID, "c.counit.r", "(1(x)eps)delta = 1",
     seq(DELTA, par(IA, EPS)), IA)

# -- weak bimonoid axioms ---------------------------------------------------

WEAK_BIMONOID = {}
_reg(WEAK_BIMONOID, "b", "delta.mu = (mu(x)mu)(1(x)c(x)1)(delta(x)delta)",
     seq(MU, DELTA),
     seq(par(DELTA, DELTA), par(IA, C, IA), par(MU, MU)))
_reg(WEAK_BIMONOID, "v.1", "eps.mu(mu(x)1) = (em(x)em)(1(x)delta(x)1)",
     seq(par(MU, IA), MU, EPS),
     seq(par(IA, DELTA, IA), par(EM, EM)))
_reg(WEAK_BIMONOID, "v.2", "eps.mu(mu(x)1) = (em(x)em)(1(x)c~delta(x)1)",
     seq(par(MU, IA), MU, EPS),
     seq(par(IA, seq(DELTA, CI), IA), par(EM, EM)))
_reg(WEAK_BIMONOID, "w.1", "(delta(x)1)delta.eta = (1(x)mu(x)1)(de(x)de)",
     seq(ETA, DELTA, par(DELTA, IA)),
     seq(par(DE, DE), par(IA, MU, IA)))
_reg(WEAK_BIMONOID, "w.2", "(delta(x)1)delta.eta = (1(x)mu.c~(x)1)(de(x)de)",
     seq(ETA, DELTA, par(DELTA, IA)),
     seq(par(DE, DE), par(IA, CI, IA), par(IA, MU, IA)))

# -- source / target / rotated-target definitions ---------------------------

DEF_S = seq(par(DE, IA), par(IA, EM))
DEF_T = seq(par(IA, DE), par(C, IA), par(IA, EM))
DEF_R = seq(par(DE, IA), par(IA, C), par(EM, IA))

# -- properties of s --------------------------------------------------------

PROPS_S = {}
_reg(PROPS_S, "s.1a", "delta.s = (1(x)mu)(1(x)1(x)s)(de(x)1)",
     seq(S, DELTA), seq(par(DE, IA), par(IA, IA, S), par(IA, MU)))
_reg(PROPS_S, "s.1b", "delta.s = (1(x)mu)(1(x)c~)(1(x)1(x)s)(de(x)1)",
     seq(S, DELTA),
     seq(par(DE, IA), par(IA, IA, S), par(IA, CI), par(IA, MU)))
_reg(PROPS_S, "s.1c", "s.mu = (s(x)em)(delta(x)1)",
     seq(MU, S), seq(par(DELTA, IA), par(S, EM)))
_reg(PROPS_S, "s.1d", "s.mu = (s(x)em)(c~delta(x)1)",
     seq(MU, S), seq(par(DELTA, IA), par(CI, IA), par(S, EM)))
_reg(PROPS_S, "s.2a", "(s(x)1)delta.eta = delta.eta",
     seq(ETA, DELTA, par(S, IA)), DE)
_reg(PROPS_S, "s.2b", "s.eta = eta", seq(ETA, S), ETA)
_reg(PROPS_S, "s.2c", "eps.mu(1(x)s) = eps.mu",
     seq(par(IA, S), MU, EPS), EM)
_reg(PROPS_S, "s.2d", "eps.s = eps", seq(S, EPS), EPS)
_reg(PROPS_S, "s.3a", "(s(x)1)delta.s = delta.s",
     seq(S, DELTA, par(S, IA)), seq(S, DELTA))
_reg(PROPS_S, "s.3b", "s.mu(1(x)s) = s.mu",
     seq(par(IA, S), MU, S), seq(MU, S))
_reg(PROPS_S, "s.4a", "delta.mu(1(x)s) = (1(x)mu)(1(x)1(x)s)(delta(x)1)",
     seq(par(IA, S), MU, DELTA),
     seq(par(DELTA, IA), par(IA, IA, S), par(IA, MU)))
_reg(PROPS_S, "s.4b", "delta.mu(s(x)1) = (1(x)mu)(c(x)1)(s(x)delta)",
     seq(par(S, IA), MU, DELTA),
     seq(par(S, DELTA), par(C, IA), par(IA, MU)))
_reg(PROPS_S, "s.4c", "(1(x)s)delta.mu = (mu(x)s)(1(x)c)(delta(x)1)",
     seq(MU, DELTA, par(IA, S)),
     seq(par(DELTA, IA), par(IA, C), par(MU, S)))
_reg(PROPS_S, "s.4d", "(s(x)1)delta.mu = (s(x)mu)(delta(x)1)",
     seq(MU, DELTA, par(S, IA)),
     seq(par(DELTA, IA), par(S, MU)))
_reg(PROPS_S, "s.5a", "s.mu(s(x)s) = mu(s(x)s)",
     seq(par(S, S), MU, S), seq(par(S, S), MU))
_reg(PROPS_S, "s.5b", "(s(x)s)delta.s = (s(x)s)delta",
     seq(S, DELTA, par(S, S)), seq(DELTA, par(S, S)))
_reg(PROPS_S, "s.6", "mu(s(x)1)c~.delta = 1",
     seq(DELTA, CI, par(S, IA), MU), IA)
_reg(PROPS_S, "s.7", "s.s = s", seq(S, S), S)

# -- properties of t --------------------------------------------------------

PROPS_T = {}
_reg(PROPS_T, "t.1a", "delta.t = (1(x)mu)(1(x)1(x)t)(de(x)1)",
     seq(T, DELTA), seq(par(DE, IA), par(IA, IA, T), par(IA, MU)))
_reg(PROPS_T, "t.1b", "delta.t = (1(x)mu)(1(x)c~)(1(x)1(x)t)(de(x)1)",
     seq(T, DELTA),
     seq(par(DE, IA), par(IA, IA, T), par(IA, CI), par(IA, MU)))
_reg(PROPS_T, "t.1c", "t.mu = (em(x)t)(1(x)delta)",
     seq(MU, T), seq(par(IA, DELTA), par(EM, T)))
_reg(PROPS_T, "t.1d", "t.mu = (em(x)t)(1(x)c~delta)",
     seq(MU, T), seq(par(IA, seq(DELTA, CI)), par(EM, T)))
_reg(PROPS_T, "t.2a", "(t(x)1)delta.eta = delta.eta",
     seq(ETA, DELTA, par(T, IA)), DE)
_reg(PROPS_T, "t.2b", "t.eta = eta", seq(ETA, T), ETA)
_reg(PROPS_T, "t.2c", "eps.mu(t(x)1) = eps.mu",
     seq(par(T, IA), MU, EPS), EM)
_reg(PROPS_T, "t.2d", "eps.t = eps", seq(T, EPS), EPS)
_reg(PROPS_T, "t.3a", "(t(x)1)delta.t = delta.t",
     seq(T, DELTA, par(T, IA)), seq(T, DELTA))
_reg(PROPS_T, "t.3b", "t.mu(t(x)1) = t.mu",
     seq(par(T, IA), MU, T), seq(MU, T))
_reg(PROPS_T, "t.4a", "delta.mu(1(x)t) = (1(x)mu)(1(x)1(x)t)(delta(x)1)",
     seq(par(IA, T), MU, DELTA),
     seq(par(DELTA, IA), par(IA, IA, T), par(IA, MU)))
_reg(PROPS_T, "t.4b", "delta.mu(t(x)1) = (1(x)mu)(c(x)1)(t(x)delta)",
     seq(par(T, IA), MU, DELTA),
     seq(par(T, DELTA), par(C, IA), par(IA, MU)))
_reg(PROPS_T, "t.4c", "(1(x)t)delta.mu = (mu(x)t)(1(x)delta)",
     seq(MU, DELTA, par(IA, T)),
     seq(par(IA, DELTA), par(MU, T)))
_reg(PROPS_T, "t.4d", "(t(x)1)delta.mu = (t(x)mu)(c(x)1)(1(x)delta)",
     seq(MU, DELTA, par(T, IA)),
     seq(par(IA, DELTA), par(C, IA), par(T, MU)))
_reg(PROPS_T, "t.5a", "t.mu(t(x)t) = mu(t(x)t)",
     seq(par(T, T), MU, T), seq(par(T, T), MU))
_reg(PROPS_T, "t.5b", "(t(x)t)delta.t = (t(x)t)delta",
     seq(T, DELTA, par(T, T)), seq(DELTA, par(T, T)))
_reg(PROPS_T, "t.6", "mu(1(x)t)delta = 1",
     seq(DELTA, par(IA, T), MU), IA)
_reg(PROPS_T, "t.7", "t.t = t", seq(T, T), T)

# -- interactions of s and t ------------------------------------------------

PROPS_ST = {}
_reg(PROPS_ST, "st.8a", "t.s = s (globular)", seq(S, T), S)
_reg(PROPS_ST, "st.8b", "s.t = t (globular)", seq(T, S), T)
_reg(PROPS_ST, "st.9a", "(s(x)1)delta.t = delta.t",
     seq(T, DELTA, par(S, IA)), seq(T, DELTA))
_reg(PROPS_ST, "st.9b", "(t(x)1)delta.s = delta.s",
     seq(S, DELTA, par(T, IA)), seq(S, DELTA))
_reg(PROPS_ST, "st.10", "(t(x)s)delta = c(s(x)t)delta",
     seq(DELTA, par(T, S)), seq(DELTA, par(S, T), C))
_reg(PROPS_ST, "st.11", "(t(x)mu)(delta(x)1) = (s(x)mu)(c(x)1)(1(x)delta)",
     seq(par(DELTA, IA), par(T, MU)),
     seq(par(IA, DELTA), par(C, IA), par(S, MU)))

# -- the rotated target morphism r ------------------------------------------

PROPS_R = {}
_reg(PROPS_R, "r.12a", "s.r = s", seq(R, S), S)
_reg(PROPS_R, "r.12b", "r.s = r", seq(S, R), R)
_reg(PROPS_R, "r.13a", "(t(x)r)delta = c(r(x)t)delta",
     seq(DELTA, par(T, R)), seq(DELTA, par(R, T), C))
_reg(PROPS_R, "r.13b", "mu(t(x)r) = mu(r(x)t)c",
     seq(par(T, R), MU), seq(C, par(R, T), MU))
_reg(PROPS_R, "r.14a", "s.mu(1(x)r) = s.mu",
     seq(par(IA, R), MU, S), seq(MU, S))
_reg(PROPS_R, "r.14b", "r.mu(1(x)s) = r.mu",
     seq(par(IA, S), MU, R), seq(MU, R))

# -- antipode ---------------------------------------------------------------

def _conv(f, g):
    "convolution product f * g = mu(f(x)g)delta as a term"
    return seq(DELTA, par(f, g), MU)


ANTIPODE = {}
_reg(ANTIPODE, "nu.ax1", "nu * 1 = t", _conv(NU, IA), T)
_reg(ANTIPODE, "nu.ax2", "1 * nu = r", _conv(IA, NU), R)
_reg(ANTIPODE, "nu.ax3", "nu * 1 * nu = nu",
     seq(DELTA, par(DELTA, IA), par(NU, IA, NU), par(MU, IA), MU), NU)
_reg(ANTIPODE, "nu.tnu", "t * nu = nu", _conv(T, NU), NU)
_reg(ANTIPODE, "nu.nur", "nu * r = nu", _conv(NU, R), NU)
_reg(ANTIPODE, "nu.15", "nu.s = r", seq(S, NU), R)
_reg(ANTIPODE, "nu.16a", "t.nu = nu.r", seq(NU, T), seq(R, NU))
_reg(ANTIPODE, "nu.16b", "nu.r = t.r", seq(R, NU), seq(R, T))
_reg(ANTIPODE, "nu.16c", "r.nu = nu.t", seq(NU, R), seq(T, NU))
_reg(ANTIPODE, "nu.16d", "nu.t = r.t", seq(T, NU), seq(T, R))
_reg(ANTIPODE, "nu.17a", "eps.nu = eps", seq(NU, EPS), EPS)
_reg(ANTIPODE, "nu.17b", "delta.nu = c(nu(x)nu)delta",
     seq(NU, DELTA), seq(DELTA, par(NU, NU), C))
_reg(ANTIPODE, "nu.17c", "nu.eta = eta", seq(ETA, NU), ETA)
_reg(ANTIPODE, "nu.17d", "nu.mu = mu(nu(x)nu)c",
     seq(MU, NU), seq(C, par(NU, NU), MU))

# -- bialgebra laws that fail on weak bimonoids (witness material) ----------

BIALGEBRA_WITNESS = {}
_reg(BIALGEBRA_WITNESS, "wit.epsmu", "eps.mu = eps(x)eps",
     seq(MU, EPS), par(EPS, EPS))
_reg(BIALGEBRA_WITNESS, "wit.deltaeta", "delta.eta = eta(x)eta",
     seq(ETA, DELTA), par(ETA, ETA))
_reg(BIALGEBRA_WITNESS, "wit.epseta", "eps.eta = 1",
     seq(ETA, EPS), IU)

# -- Frobenius family (over carrier R) ---------------------------------------

MUR = Gen("mu")
ETAR = Gen("eta")
DELTAR = Gen("delta")
EPSR = Gen("eps")
IR = Id("R")
RHO = seq(ETAR, DELTAR)
SIGMA = seq(MUR, EPSR)

FROBENIUS = {}
_reg(FROBENIUS, "frob.cond", "(1(x)mu)(delta(x)1) = (mu(x)1)(1(x)delta)",
     seq(par(DELTAR, IR), par(IR, MUR)),
     seq(par(IR, DELTAR), par(MUR, IR)))
_reg(FROBENIUS, "frob.a1l", "(1(x)mu)(delta(x)1) = delta.mu",
     seq(par(DELTAR, IR), par(IR, MUR)), seq(MUR, DELTAR))
_reg(FROBENIUS, "frob.a1r", "delta.mu = (mu(x)1)(1(x)delta)",
     seq(MUR, DELTAR), seq(par(IR, DELTAR), par(MUR, IR)))
_reg(FROBENIUS, "frob.tri1", "(sigma(x)1)(1(x)rho) = 1",
     seq(par(IR, RHO), par(SIGMA, IR)), IR)
_reg(FROBENIUS, "frob.tri2", "(1(x)sigma)(rho(x)1) = 1",
     seq(par(RHO, IR), par(IR, SIGMA)), IR)

FROBENIUS_SEP = {}
_reg(FROBENIUS_SEP, "frob.sep", "mu.delta = 1", seq(DELTAR, MUR), IR)


def all_st_properties():
    "The full property table for s, t, their interactions, and r."
    table = {}
    table.update(PROPS_S)
    table.update(PROPS_T)
    table.update(PROPS_ST)
    table.update(PROPS_R)
    return table
