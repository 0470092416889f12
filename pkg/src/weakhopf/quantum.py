"""Quantum categories and quantum groupoids realized from weak bimonoids
and weak Hopf monoids, with full axiom verification (B1-B6, G1-G3).

The object-of-arrows is the carrier A, the object-of-objects is C = (A, t),
the composition morphism is mu restricted to P = A (x)_C A = (A (x) A, m),
and the unit morphism is t: C -> A.  All morphisms are represented on
ambient tensor powers of A; identities of completed objects are their
idempotents.
"""

from __future__ import annotations

import time

from weakhopf.linalg import (
    Space, LinMap, compose, compose_all, tensor, tensor_all, identity,
    braiding, braiding_inv, equalizer, split_idempotent,
)
from weakhopf.comodules import (
    regular_comodule, c_comodule, tensor_over_C, tensor_idempotent,
    gamma_l as comod_gamma_l, gamma_r as comod_gamma_r, unit_iso_maps,
)
from weakhopf.report import Report, PASS, FAIL


class PreconditionSquareFailed(Exception):
    pass


class NoSolution(Exception):
    pass


class AntipodeNotInvertible(Exception):
    pass


class QuantumCategoryData:
    """The data (A, C, s, t, mu, eta) derived from a weak bimonoid, with
    the derived P, delta_l, delta_r cached on construction."""

    def __init__(self, w):
        self.w = w
        A = w.carrier
        K = A.field
        iA = identity(A)
        chi = w.chi
        # precondition: (t (x) s)delta = c(s (x) t)delta
        lhs = compose(tensor(w.t, w.s), w.delta)
        rhs = compose_all(w.delta, tensor(w.s, w.t), braiding(A, A, chi))
        if lhs != rhs:
            raise PreconditionSquareFailed("source/target square does not commute")
        self.A = A
        self.iA = iA
        self.chi = chi
        # coactions of C on A
        self.gamma_l = compose_all(w.delta, tensor(iA, w.s),
                                   braiding_inv(A, A, chi))
        self.gamma_r = compose(tensor(iA, w.t), w.delta)
        # P = A (x)_C A with idempotent m
        self.m = tensor_idempotent(regular_comodule(w), regular_comodule(w))
        self.mu = compose(w.mu, self.m)
        self.eta = w.t
        self.delta_l = self._solve_delta_l()
        self.delta_r = self._solve_delta_r()

    # -- induced structure ---------------------------------------------------

    def _solve_delta_l(self):
        """delta_l: P -> A (x) A (x) P from its defining equation
        (1 (x) 1 (x) iota)delta_l = (1 (x) c (x) 1)(delta (x) delta)iota,
        solved by composing with the split retraction m of iota and then
        verified against the defining square."""
        w = self.w
        iA = self.iA
        direct = compose_all(self.m, tensor(w.delta, w.delta),
                             tensor_all(iA, braiding(self.A, self.A, self.chi), iA))
        solved = compose(tensor_all(iA, iA, self.m), direct)
        if solved != direct:
            raise NoSolution("delta_l does not factor through the equalizer")
        return solved

    def _solve_delta_r(self):
        """delta_r: P -> P (x) A from (iota (x) 1)delta_r =
        (1 (x) 1 (x) mu)delta_l, via the retraction."""
        w = self.w
        iA = self.iA
        target = compose(tensor_all(iA, iA, w.mu), self.delta_l)
        solved = compose(tensor(self.m, iA), target)
        if solved != target:
            raise NoSolution("delta_r does not factor through the equalizer")
        return solved

    def p_coactions(self):
        "The induced left and right C-coactions on P."
        iA = self.iA
        gl = compose_all(self.m, tensor(self.gamma_l, iA),
                         tensor(iA, self.m))
        gr = compose_all(self.m, tensor(iA, self.gamma_r),
                         tensor(self.m, iA))
        return gl, gr


def build_P(qc):
    """P with its bicomodule structure; checks the two commuting forks and
    the agreement of rank(m) with the kernel equalizer."""
    w = qc.w
    iA = qc.iA
    rep = Report("P-bicomodule")
    t0 = time.perf_counter()
    glP, grP = qc.p_coactions()
    # forks: (gamma_l (x) 1)iota equalizes 1 (x) (gamma_r (x) 1 / 1 (x) gamma_l)
    base_l = compose(tensor(qc.gamma_l, iA), qc.m)
    rep.record("P.fork.l", "(gamma_l(x)1)iota equalizes the defining pair",
               compose(tensor_all(iA, qc.gamma_r, iA), base_l),
               compose(tensor_all(iA, iA, qc.gamma_l), base_l))
    base_r = compose(tensor(iA, qc.gamma_r), qc.m)
    rep.record("P.fork.r", "(1(x)gamma_r)iota equalizes the defining pair",
               compose(tensor_all(qc.gamma_r, iA, iA), base_r),
               compose(tensor_all(iA, qc.gamma_l, iA), base_r))
    # bicomodule square for P
    rep.record("P.bico.square", "(1(x)gamma_r)gamma_l = (gamma_l(x)1)gamma_r on P",
               compose(tensor(iA, grP), glP),
               compose(tensor(glP, iA), grP))
    # kernel-equalizer oracle
    AA = qc.A.tensor(qc.A)
    f = tensor(qc.gamma_r, iA)
    g = tensor(iA, qc.gamma_l)
    E, _ = equalizer(f, g)
    P, _, _ = split_idempotent(qc.m)
    rep.add("P.rank", "rank m = dim equalizer of the defining pair",
            PASS if E.dim == P.dim else FAIL,
            witness=None if E.dim == P.dim else (str(P.dim), str(E.dim), "", ""))
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return rep


def check_quantum_category(qc):
    "Axioms B1 through B6."
    w = qc.w
    A, iA, chi = qc.A, qc.iA, qc.chi
    rep = Report("quantum-category")
    t0 = time.perf_counter()
    delta_C = compose(tensor(w.t, w.t), w.delta)
    glP, grP = qc.p_coactions()

    # B1: (A, mu, eta) is a monoid in C-bicomodules
    rep.record("B1.mu.l", "gamma_l.mu = (1(x)mu)gamma_l on P",
               compose(qc.gamma_l, qc.mu), compose(tensor(iA, qc.mu), glP))
    rep.record("B1.mu.r", "gamma_r.mu = (mu(x)1)gamma_r on P",
               compose(qc.gamma_r, qc.mu), compose(tensor(qc.mu, iA), grP))
    rep.record("B1.eta.l", "gamma_l.eta = (1(x)eta)delta_C",
               compose(qc.gamma_l, qc.eta),
               compose(tensor(iA, qc.eta), delta_C))
    rep.record("B1.eta.r", "gamma_r.eta = (eta(x)1)delta_C",
               compose(qc.gamma_r, qc.eta),
               compose(tensor(qc.eta, iA), delta_C))
    MA = regular_comodule(w)
    u3 = tensor_idempotent(tensor_over_C(MA, MA), MA)
    rep.record("B1.assoc", "mu(mu(x)1) = mu(1(x)mu) on the triple tensor",
               compose_all(u3, tensor(qc.mu, iA), qc.mu),
               compose_all(u3, tensor(iA, qc.mu), qc.mu))
    MC = c_comodule(w)
    m_CA = tensor_idempotent(MC, MA)
    m_AC = tensor_idempotent(MA, MC)
    phiA, psiA, phiA_p, psiA_p = unit_iso_maps(MA)
    rep.record("B1.unit.l", "mu(eta(x)1) = left unit iso on C(x)A",
               compose_all(m_CA, tensor(qc.eta, iA), qc.mu), phiA_p)
    rep.record("B1.unit.r", "mu(1(x)eta) = right unit iso on A(x)C",
               compose_all(m_AC, tensor(iA, qc.eta), qc.mu), phiA)

    # B2
    lhs = compose_all(qc.delta_l, tensor_all(w.t, w.epsilon, iA, iA),
                      tensor_all(iA, w.mu))
    rhs = compose_all(qc.delta_l, tensor_all(w.epsilon, w.s, iA, iA),
                      tensor_all(iA, w.mu))
    rep.record("B2", "(1(x)mu)(t(x)eps(x)1)delta_l = (1(x)mu)(eps(x)s(x)1)delta_l",
               lhs, rhs)
    # B2 fork: (1(x)1(x)mu)delta_l equalizes the defining pair
    pre = compose(tensor_all(iA, iA, w.mu), qc.delta_l)
    rep.record("B2.fork", "(1(x)1(x)mu)delta_l equalizes the defining pair",
               compose(tensor_all(qc.gamma_r, iA, iA), pre),
               compose(tensor_all(iA, qc.gamma_l, iA), pre))
    # delta_l is a left coaction of the comonoid A (x) A
    delta_AA = compose_all(tensor(w.delta, w.delta),
                           tensor_all(iA, braiding(A, A, chi), iA))
    rep.record("B.delta_l.coassoc",
               "(delta_AA(x)1)delta_l = (1(x)1(x)delta_l)delta_l",
               compose(tensor(delta_AA, tensor(iA, iA)), qc.delta_l),
               compose(tensor_all(iA, iA, qc.delta_l), qc.delta_l))
    rep.record("B.delta_l.counit", "(eps(x)eps(x)1)delta_l = 1_P",
               compose(tensor_all(w.epsilon, w.epsilon, iA, iA), qc.delta_l),
               qc.m)
    # defining squares
    rep.record("B.delta_l.square",
               "(1(x)1(x)iota)delta_l = (1(x)c(x)1)(delta(x)delta)iota",
               compose(tensor_all(iA, iA, qc.m), qc.delta_l),
               compose_all(qc.m, tensor(w.delta, w.delta),
                           tensor_all(iA, braiding(A, A, chi), iA)))
    rep.record("B.delta_r.square", "(iota(x)1)delta_r = (1(x)1(x)mu)delta_l",
               compose(tensor(qc.m, iA), qc.delta_r),
               compose(tensor_all(iA, iA, w.mu), qc.delta_l))

    # B3
    rep.record("B3", "delta.mu = (mu(x)1)delta_r",
               compose(w.delta, qc.mu),
               compose(tensor(qc.mu, iA), qc.delta_r))
    # B4
    rep.record("B4", "eps.mu = (eps(x)eps)iota",
               compose(w.epsilon, qc.mu),
               compose(tensor(w.epsilon, w.epsilon), qc.m))
    # B5
    rep.record("B5", "eps.eta = eps on C",
               compose(w.epsilon, qc.eta), w.epsilon)
    # B6
    de = compose(w.delta, qc.eta)
    rep.record("B6.s", "(eta(x)1)(s(x)1)delta.eta = delta.eta",
               compose_all(de, tensor(w.s, iA), tensor(qc.eta, iA)), de)
    rep.record("B6.t", "(eta(x)1)(t(x)1)delta.eta = delta.eta",
               compose_all(de, tensor(w.t, iA), tensor(qc.eta, iA)), de)
    # B6 makes C a right A-comodule via (s (x) 1)delta.eta
    gC = compose_all(qc.eta, w.delta, tensor(w.s, iA))
    rep.record("B6.comod.coassoc", "B6 coaction is coassociative",
               compose(tensor(gC, iA), gC),
               compose(tensor(iA, w.delta), gC))
    rep.record("B6.comod.counit", "B6 coaction is counital",
               compose(tensor(iA, w.epsilon), gC), w.t)
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return rep


class QuantumGroupoidData:
    """A quantum category equipped with the comonoid isomorphisms upsilon
    and nu and the comparison theta: P_l -> P_r."""

    def __init__(self, qc, hopf):
        if hopf.nu_inv is None:
            raise AntipodeNotInvertible("an inverse for the antipode is required")
        self.qc = qc
        self.hopf = hopf
        w = qc.w
        A, iA, chi = qc.A, qc.iA, qc.chi
        nu = hopf.nu
        self.upsilon = compose_all(w.t, nu, nu, w.t)
        self.upsilon_inv = compose_all(w.t, hopf.nu_inv, hopf.nu_inv, w.t)
        # theta = (1 (x) nu.mu)(c (x) 1)(1 (x) delta) as a map P -> P
        raw = compose_all(tensor(iA, w.delta),
                          tensor(braiding(A, A, chi), iA),
                          tensor(iA, w.mu), tensor(iA, nu))
        self.theta = compose_all(qc.m, raw, qc.m)
        # theta^{-1} = (1(x)eps.mu(x)1)(delta(x)c~delta)c~(1(x)nu~.mu)(delta(x)1)
        raw_inv = compose_all(
            tensor(w.delta, iA), tensor(iA, w.mu), tensor(iA, hopf.nu_inv),
            braiding_inv(A, A, chi),
            tensor(w.delta, compose(braiding_inv(A, A, chi), w.delta)),
            tensor_all(iA, compose(w.epsilon, w.mu), iA))
        self.theta_inv = compose_all(qc.m, raw_inv, qc.m)

    def varsigma(self):
        "The C-valued triple extraction from P (both routes must agree)."
        qc = self.qc
        w = qc.w
        iA = qc.iA
        tt = w.t
        route1 = compose_all(qc.m, tensor(qc.gamma_r, iA),
                             tensor_all(w.s, tt, tt))
        route2 = compose_all(qc.m, tensor(iA, qc.gamma_l),
                             tensor_all(w.s, tt, tt))
        return route1, route2

    def p_l_coaction(self):
        "P as a left comodule over the triple tensor, using nu."
        qc = self.qc
        w = qc.w
        A, iA, chi = qc.A, qc.iA, qc.chi
        AA = A.tensor(A)
        full = compose(tensor_all(iA, iA, self.qc.delta_r), qc.delta_l)
        return compose_all(full,
                           tensor_all(iA, iA, identity(AA), self.hopf.nu),
                           tensor(tensor(iA, iA), braiding(AA, A, chi)))

    def p_r_coaction(self):
        "P as a left comodule over the triple tensor, using nu^{-1}."
        qc = self.qc
        w = qc.w
        A, iA, chi = qc.A, qc.iA, qc.chi
        W = A.tensor(A).tensor(A.tensor(A))  # ambient of A(x)A(x)P
        full = compose(tensor_all(iA, iA, self.qc.delta_r), qc.delta_l)
        return compose_all(full,
                           tensor_all(iA, iA, iA, iA, self.hopf.nu_inv),
                           braiding_inv(W, A, chi))


def build_quantum_groupoid(hopf):
    qc = QuantumCategoryData(hopf.bimonoid)
    return QuantumGroupoidData(qc, hopf)


def check_quantum_groupoid(qg):
    "Axioms G1-G3 plus the structural facts about upsilon, nu and theta."
    qc = qg.qc
    w = qc.w
    A, iA, chi = qc.A, qc.iA, qc.chi
    hopf = qg.hopf
    rep = Report("quantum-groupoid")
    t0 = time.perf_counter()

    rep.record("G1", "s.nu = t", compose(w.s, hopf.nu), w.t)
    rep.record("G2", "t.nu = upsilon.s", compose(w.t, hopf.nu),
               compose(qg.upsilon, w.s))
    s1, s2 = qg.varsigma()
    rep.record("G3.sigma.routes", "the two routes to varsigma agree", s1, s2)
    # G3 square
    lhs = compose(s1, qg.theta)
    rhs = compose_all(s1, braiding(A, A.tensor(A), chi),
                      tensor_all(iA, iA, qg.upsilon))
    rep.record("G3", "varsigma.theta = (1(x)1(x)upsilon)c.varsigma",
               lhs, rhs)
    # theta is invertible in the completion
    rep.record("theta.inv.l", "theta~.theta = 1_P",
               compose(qg.theta_inv, qg.theta), qc.m)
    rep.record("theta.inv.r", "theta.theta~ = 1_P",
               compose(qg.theta, qg.theta_inv), qc.m)
    # theta is a comodule morphism P_l -> P_r over the triple tensor
    gl = qg.p_l_coaction()
    gr = qg.p_r_coaction()
    rep.record("theta.comod", "coaction_r.theta = (1(x)1(x)1(x)theta)coaction_l",
               compose(gr, qg.theta),
               compose(tensor(tensor_all(iA, iA, iA), qg.theta), gl))
    # upsilon and nu are comonoid isomorphisms
    delta_C = compose(tensor(w.t, w.t), w.delta)
    c = braiding(A, A, chi)
    rep.record("upsilon.comonoid", "delta_C.upsilon = (ups(x)ups)c.c.delta_C",
               compose(delta_C, qg.upsilon),
               compose_all(delta_C, c, c, tensor(qg.upsilon, qg.upsilon)))
    rep.record("upsilon.inv", "upsilon~.upsilon = 1_C",
               compose(qg.upsilon_inv, qg.upsilon), w.t)
    rep.record("nu.comonoid", "delta.nu = c(nu(x)nu)delta",
               compose(w.delta, hopf.nu),
               compose_all(w.delta, tensor(hopf.nu, hopf.nu), c))
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return rep
