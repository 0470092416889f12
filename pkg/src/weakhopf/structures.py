"""Structure bundles (monoid, comonoid, Frobenius, weak bimonoid, weak
Hopf) together with their verification suites.

All checkers evaluate the registry terms against the bundle and compare
matrices exactly; a failing identity is reported with the first basis pair
where the two sides differ.
"""

from __future__ import annotations

import time

from weakhopf import registry
from weakhopf.diagram import Env, evaluate
from weakhopf.linalg import (
    LinMap, Space, compose, compose_all, tensor, identity, zero_map,
    DomainMismatch, _rref,
)
from weakhopf.report import Report, PASS, FAIL


class NotFrobeniusMorphism(Exception):
    pass


def _run_suite(name, table, env, pre=()):
    rep = Report(name)
    t0 = time.perf_counter()
    for ident in sorted(table):
        item = table[ident]
        rep.record(item.id, item.statement,
                   evaluate(item.lhs, env), evaluate(item.rhs, env))
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return rep


# ---------------------------------------------------------------------------
# plain monoids and comonoids


class MonoidData:
    def __init__(self, carrier, mu, eta, chi):
        assert mu.src == carrier.tensor(carrier) and mu.tgt == carrier
        assert eta.src == Space.unit(carrier.field, carrier.group)
        assert eta.tgt == carrier
        self.carrier = carrier
        self.mu = mu
        self.eta = eta
        self.chi = chi

    def env(self):
        return Env({"A": self.carrier}, {"mu": self.mu, "eta": self.eta}, self.chi)


class ComonoidData:
    def __init__(self, carrier, delta, epsilon, chi):
        assert delta.src == carrier and delta.tgt == carrier.tensor(carrier)
        assert epsilon.src == carrier
        assert epsilon.tgt == Space.unit(carrier.field, carrier.group)
        self.carrier = carrier
        self.delta = delta
        self.epsilon = epsilon
        self.chi = chi

    def env(self):
        return Env({"A": self.carrier},
                   {"delta": self.delta, "eps": self.epsilon}, self.chi)


def check_monoid(m):
    return _run_suite("monoid", registry.MONOID, m.env())


def check_comonoid(c):
    return _run_suite("comonoid", registry.COMONOID, c.env())


# ---------------------------------------------------------------------------
# Frobenius monoids


class FrobeniusData:
    """A monoid and comonoid on one carrier subject to the Frobenius
    condition; rho = delta.eta and sigma = eps.mu are the unit and counit
    of the self-adjunction."""

    def __init__(self, carrier, mu, eta, delta, epsilon, chi):
        self.carrier = carrier
        self.mu = mu
        self.eta = eta
        self.delta = delta
        self.epsilon = epsilon
        self.chi = chi
        self.rho = compose(delta, eta)
        self.sigma = compose(epsilon, mu)

    def env(self):
        return Env({"A": self.carrier, "R": self.carrier},
                   {"mu": self.mu, "eta": self.eta,
                    "delta": self.delta, "eps": self.epsilon}, self.chi)

    def monoid(self):
        return MonoidData(self.carrier, self.mu, self.eta, self.chi)

    def comonoid(self):
        return ComonoidData(self.carrier, self.delta, self.epsilon, self.chi)


def check_frobenius(fr):
    """Monoid and comonoid axioms, the Frobenius condition, both equalities
    of the delta.mu exchange law, and the triangle identities for the
    rho -| sigma self-adjunction."""
    env = fr.env()
    rep = Report("frobenius")
    t0 = time.perf_counter()
    for table in (registry.MONOID, registry.COMONOID, registry.FROBENIUS):
        for ident in sorted(table):
            item = table[ident]
            rep.record(item.id, item.statement,
                       evaluate(item.lhs, env), evaluate(item.rhs, env))
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return rep


def is_separable(fr):
    "mu.delta = 1 on the nose."
    return compose(fr.mu, fr.delta) == identity(fr.carrier)


def check_morphism(f, src, tgt, monoid=True, comonoid=True):
    "Is f a monoid and/or comonoid morphism between the two bundles?"
    ok = True
    if monoid:
        ok = ok and compose(tgt.mu, tensor(f, f)) == compose(f, src.mu)
        ok = ok and compose(f, src.eta) == tgt.eta
    if comonoid:
        ok = ok and compose(tensor(f, f), src.delta) == compose(tgt.delta, f)
        ok = ok and compose(tgt.epsilon, f) == src.epsilon
    return ok


def frobenius_inverse(f, R, S):
    """Exact inverse of a Frobenius morphism f: R -> S, via
    (1(x)sigma)(1(x)f(x)1)(rho(x)1); also asserts the mirrored formula
    (sigma(x)1)(1(x)f(x)1)(1(x)rho) gives the same map and that the result
    is a two-sided inverse."""
    if not check_morphism(f, R, S):
        raise NotFrobeniusMorphism("not a monoid+comonoid morphism")
    iR = identity(R.carrier)
    iS = identity(S.carrier)
    g = compose_all(tensor(R.rho, iS), tensor(iR, tensor(f, iS)),
                    tensor(iR, S.sigma))
    g2 = compose_all(tensor(iS, R.rho), tensor(tensor(iS, f), iR),
                     tensor(S.sigma, iR))
    assert g == g2, "the two inverse formulas disagree"
    assert compose(g, f) == iR and compose(f, g) == iS
    return g


# ---------------------------------------------------------------------------
# weak bimonoids


class WeakBimonoidData:
    """Carrier with mu, eta, delta, eps in an ambient braiding; the source,
    target and rotated-target morphisms are derived from their defining
    diagrams on construction and cached."""

    def __init__(self, carrier, mu, eta, delta, epsilon, chi):
        self.carrier = carrier
        self.mu = mu
        self.eta = eta
        self.delta = delta
        self.epsilon = epsilon
        self.chi = chi
        self.s, self.t, self.r = derive_stn(self)

    @property
    def field(self):
        return self.carrier.field

    def base_env(self):
        return Env({"A": self.carrier},
                   {"mu": self.mu, "eta": self.eta,
                    "delta": self.delta, "eps": self.epsilon}, self.chi)

    def env(self):
        e = self.base_env()
        e.generators.update({"s": self.s, "t": self.t, "r": self.r})
        return e

    def monoid(self):
        return MonoidData(self.carrier, self.mu, self.eta, self.chi)

    def comonoid(self):
        return ComonoidData(self.carrier, self.delta, self.epsilon, self.chi)


def derive_stn(w):
    "Evaluate the three defining diagrams for s, t and r."
    env = w.base_env()
    s = evaluate(registry.DEF_S, env)
    t = evaluate(registry.DEF_T, env)
    r = evaluate(registry.DEF_R, env)
    return s, t, r


def check_weak_bimonoid(w):
    "Axioms (b), (v) (both equalities) and (w) (both equalities)."
    return _run_suite("weak-bimonoid", registry.WEAK_BIMONOID, w.env())


def check_st_properties(w):
    """The whole property table of s, t, their interactions and r (the
    numbered identities 1-11 in both flavours, plus 12-14)."""
    return _run_suite("source-target", registry.all_st_properties(), w.env())


def weakness_witnesses(w):
    """Check the three bialgebra laws that a genuinely weak bimonoid
    violates.  Returns the report; items are expected to FAIL on weak
    (non-bialgebra) inputs, each with an explicit witness."""
    return _run_suite("bialgebra-witness", registry.BIALGEBRA_WITNESS, w.env())


def convolution(f, g, w):
    "Convolution product f * g = mu (f (x) g) delta on endomaps of the carrier."
    A = w.carrier
    if not (f.src == A and f.tgt == A and g.src == A and g.tgt == A):
        raise DomainMismatch("convolution arguments must be endomaps of the carrier")
    return compose_all(w.delta, tensor(f, g), w.mu)


# ---------------------------------------------------------------------------
# weak Hopf monoids


class WeakHopfData:
    def __init__(self, bimonoid, nu, nu_inv=None):
        self.bimonoid = bimonoid
        self.nu = nu
        self.nu_inv = nu_inv
        if nu_inv is not None:
            ia = identity(bimonoid.carrier)
            assert compose(nu, nu_inv) == ia and compose(nu_inv, nu) == ia

    @property
    def carrier(self):
        return self.bimonoid.carrier

    def env(self):
        e = self.bimonoid.env()
        e.generators["nu"] = self.nu
        if self.nu_inv is not None:
            e.generators["nu_inv"] = self.nu_inv
        return e


def check_weak_hopf(h):
    """The three antipode axioms, the two immediate convolution
    consequences, and the identities 15-17."""
    return _run_suite("weak-hopf", registry.ANTIPODE, h.env())


def _linear_system_for_nu(w, constraints):
    """Assemble the dense augmented system for the unknown antipode matrix.
    `constraints` is a list of (builder, rhs) where builder(nu_map) is
    linear in nu.  Returns (unknown positions, matrix rows)."""
    A = w.carrier
    K = A.field
    positions = [(ti, si) for ti in range(A.dim) for si in range(A.dim)
                 if A.grade(ti) == A.grade(si)]
    pos_index = {p: k for k, p in enumerate(positions)}
    rows = {}

    def touch(cid, key):
        rk = (cid, key)
        if rk not in rows:
            rows[rk] = [K.zero] * (len(positions) + 1)
        return rows[rk]

    for cid, (builder, rhs) in enumerate(constraints):
        for key, v in rhs.entries.items():
            touch(cid, key)[len(positions)] = v
        for k, p in enumerate(positions):
            basis_map = LinMap(A, A, {p: K.one}, validate=False)
            for key, v in builder(basis_map).entries.items():
                touch(cid, key)[k] = v
    return positions, [rows[k] for k in sorted(rows)]


def find_antipode(w):
    """Solve for the antipode exactly.

    The convolution axioms nu * 1 = t and 1 * nu = r are affine-linear in
    the matrix of nu, as are the derived identities nu.s = r, t.nu = t.r,
    r.nu = r.t, nu.eta = eta, eps.nu = eps, t * nu = nu and nu * r = nu.
    The combined linear system is solved exactly; a solution is returned
    only if it also satisfies the third axiom nu * 1 * nu = nu.  When a
    full solution exists it is the unique antipode, and the solver probes
    each residual kernel direction to confirm it breaks the third axiom.
    """
    A = w.carrier
    K = A.field
    ia = identity(A)

    def conv(f, g):
        return compose_all(w.delta, tensor(f, g), w.mu)

    constraints = [
        (lambda n: conv(n, ia), w.t),
        (lambda n: conv(ia, n), w.r),
        (lambda n: compose(n, w.s), w.r),
        (lambda n: compose(w.t, n), compose(w.t, w.r)),
        (lambda n: compose(w.r, n), compose(w.r, w.t)),
        (lambda n: compose(n, w.eta), w.eta),
        (lambda n: compose(w.epsilon, n), w.epsilon),
        (lambda n: conv(w.t, n) - n, zero_map(A, A)),
        (lambda n: conv(n, w.r) - n, zero_map(A, A)),
    ]
    positions, mat = _linear_system_for_nu(w, constraints)
    ncols = len(positions)
    pivots = _rref(K, mat)
    if ncols in pivots:
        return None  # inconsistent: no antipode
    sol = {}
    for rix, pc in enumerate(pivots):
        v = mat[rix][ncols]
        if v != K.zero:
            sol[positions[pc]] = v
    nu = LinMap(A, A, sol)
    third = compose_all(w.delta, tensor(w.delta, ia), tensor(nu, tensor(ia, nu)),
                        tensor(w.mu, ia), w.mu)
    if third != nu or conv(nu, ia) != w.t or conv(ia, nu) != w.r:
        return None
    # uniqueness probe along residual kernel directions
    pivot_set = set(pivots)
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = {positions[free]: K.one}
        for rix, pc in enumerate(pivots):
            coef = mat[rix][free]
            if coef != K.zero:
                vec[positions[pc]] = K.neg(coef)
        other = nu + LinMap(A, A, vec)
        third2 = compose_all(w.delta, tensor(w.delta, ia),
                             tensor(other, tensor(ia, other)),
                             tensor(w.mu, ia), w.mu)
        assert third2 != other, "distinct antipode found; uniqueness violated"
    return nu
