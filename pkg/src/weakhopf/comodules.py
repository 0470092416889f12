"""Right comodules over a weak bimonoid, their induced bicomodule
structure over the object-of-objects C, the cosplit pair with its
idempotent m, the tensor product over C, unit isomorphisms, the strong
monoidal forgetful comparison, and duals (over a weak Hopf monoid).

A comodule is carried by an ambient space together with an idempotent
(identity for honest comodules, m for tensor products, t for C itself);
all identity laws land on that idempotent.
"""

from __future__ import annotations

import time

from weakhopf.linalg import (
    Space, LinMap, compose, compose_all, tensor, tensor_all, identity,
    braiding, braiding_inv, dual_space, equalizer, image_in, zero_map,
)
from weakhopf.report import Report, PASS, FAIL


class ComoduleData:
    """A right comodule in the completion: carrier (space, e) and coaction
    gamma: M -> M (x) A with gamma.e = gamma = (e (x) 1)gamma."""

    def __init__(self, space, e, gamma, over, validate=True):
        self.space = space
        self.e = e
        self.gamma = gamma
        self.over = over
        if validate:
            A = over.carrier
            iA = identity(A)
            assert gamma.src == space and gamma.tgt == space.tensor(A)
            assert compose(gamma, e) == gamma == compose(tensor(e, iA), gamma)
            assert compose(tensor(gamma, iA), gamma) == \
                compose(tensor(identity(space), over.delta), gamma), \
                "coaction not coassociative"
            assert compose(tensor(identity(space), over.epsilon), gamma) == e, \
                "coaction not counital"

    def __repr__(self):
        return "ComoduleData(ambient dim %d)" % self.space.dim


class BicomoduleData:
    "Left and right C-coactions with the compatibility square."

    def __init__(self, space, e, gamma_l, gamma_r, over):
        self.space = space
        self.e = e
        self.gamma_l = gamma_l
        self.gamma_r = gamma_r
        self.over = over


def regular_comodule(w):
    "A coacting on itself by its comultiplication."
    return ComoduleData(w.carrier, identity(w.carrier), w.delta, w)


def c_comodule(w):
    "C = (A, t) as an A-comodule with coaction delta.t."
    return ComoduleData(w.carrier, w.t, compose(w.delta, w.t), w)


def gamma_l(M):
    "(s (x) 1) c~ gamma : M -> C (x) M (the C-strand lives in ambient A)."
    w = M.over
    A = w.carrier
    return compose_all(M.gamma, braiding_inv(M.space, A, w.chi),
                       tensor(w.s, identity(M.space)))


def gamma_r(M):
    "(1 (x) t) gamma : M -> M (x) C."
    w = M.over
    return compose(tensor(identity(M.space), w.t), M.gamma)


def induce_bicomodule(M):
    """The induced C-bicomodule (s (x) 1 (x) t)(c~ (x) 1)(1 (x) delta)gamma
    together with its extracted one-sided coactions."""
    w = M.over
    A = w.carrier
    iM = identity(M.space)
    iA = identity(A)
    full = compose_all(M.gamma, tensor(iM, w.delta),
                       tensor(braiding_inv(M.space, A, w.chi), iA),
                       tensor_all(w.s, iM, w.t))
    gl = gamma_l(M)
    gr = gamma_r(M)
    # the one-sided coactions are the counit-contractions of the full coaction
    assert compose(tensor_all(iA, iM, w.epsilon), full) == gl
    assert compose(tensor_all(w.epsilon, iM, iA), full) == gr
    return BicomoduleData(M.space, M.e, gl, gr, w)


def check_bicomodule(B):
    "Coaction axioms for both sides plus the commuting square."
    w = B.over
    A = w.carrier
    iM = identity(B.space)
    iA = identity(A)
    delta_C = compose(tensor(w.t, w.t), w.delta)
    rep = Report("bicomodule")
    t0 = time.perf_counter()
    rep.record("bico.l.coassoc", "(delta_C(x)1)gamma_l = (1(x)gamma_l)gamma_l",
               compose(tensor(delta_C, iM), B.gamma_l),
               compose(tensor(iA, B.gamma_l), B.gamma_l))
    rep.record("bico.l.counit", "(eps(x)1)gamma_l = 1",
               compose(tensor(w.epsilon, iM), B.gamma_l), B.e)
    rep.record("bico.r.coassoc", "(gamma_r(x)1)gamma_r = (1(x)delta_C)gamma_r",
               compose(tensor(B.gamma_r, iA), B.gamma_r),
               compose(tensor(iM, delta_C), B.gamma_r))
    rep.record("bico.r.counit", "(1(x)eps)gamma_r = 1",
               compose(tensor(iM, w.epsilon), B.gamma_r), B.e)
    rep.record("bico.square", "(1(x)gamma_r)gamma_l = (gamma_l(x)1)gamma_r",
               compose(tensor(iA, B.gamma_r), B.gamma_l),
               compose(tensor(B.gamma_l, iA), B.gamma_r))
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return rep


def cosplit_d(M, N):
    """The cosplitting d = (1 (x) eps.mu(1 (x) t) (x) 1)(gamma (x) 1 (x) 1)
    of the parallel pair (gamma_r (x) 1, 1 (x) gamma_l), with both cosplit
    laws checked."""
    w = M.over
    A = w.carrier
    iA = identity(A)
    iM = identity(M.space)
    iN = identity(N.space)
    em_t = compose_all(tensor(iA, w.t), w.mu, w.epsilon)
    d = compose_all(tensor_all(M.gamma, iA, N.e), tensor_all(iM, em_t, iN))
    # the parallel pair as morphisms out of (M (x) N, e (x) e')
    gr1 = tensor(gamma_r(M), N.e)
    gl1 = tensor(M.e, gamma_l(N))
    rep = Report("cosplit")
    t0 = time.perf_counter()
    rep.record("cosplit.df", "d(gamma_r(x)1) = 1",
               compose(d, gr1), tensor(M.e, N.e))
    rep.record("cosplit.fdg", "(gamma_r(x)1)d(1(x)gamma_l) = (1(x)gamma_l)d(1(x)gamma_l)",
               compose_all(gl1, d, gr1), compose_all(gl1, d, gl1))
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return d, rep


def tensor_idempotent(M, N):
    "m = (1 (x) eps.mu (x) 1)(1 (x) 1 (x) c~ (x) 1)(gamma (x) gamma)."
    w = M.over
    A = w.carrier
    iM = identity(M.space)
    iN = identity(N.space)
    em = compose(w.epsilon, w.mu)
    return compose_all(tensor(M.gamma, N.gamma),
                       tensor_all(iM, identity(A),
                                  braiding_inv(N.space, A, w.chi)),
                       tensor_all(iM, em, iN))


def tensor_coaction(M, N):
    "gamma on M (x)_C N: (1(x)1(x)mu)(1(x)c(x)1)(gamma (x) gamma)."
    w = M.over
    A = w.carrier
    iM = identity(M.space)
    iN = identity(N.space)
    return compose_all(tensor(M.gamma, N.gamma),
                       tensor_all(iM, braiding(A, N.space, w.chi), identity(A)),
                       tensor_all(iM, iN, w.mu))


def tensor_over_C(M, N, validate=True):
    """The tensor product over C as the pair (ambient M (x) N, m) with the
    diagonal coaction; checks that m is idempotent and Lemma-compatible
    with the coaction, then packages the result as a comodule."""
    w = M.over
    m = tensor_idempotent(M, N)
    gam = tensor_coaction(M, N)
    ee = tensor(M.e, N.e)
    sp = M.space.tensor(N.space)
    iA = identity(w.carrier)
    if validate:
        assert compose(m, m) == m, "m is not idempotent"
        assert compose(m, ee) == m == compose(ee, m)
        assert compose(gam, m) == gam == compose(tensor(m, iA), gam), \
            "coaction does not descend to the tensor over C"
    return ComoduleData(sp, m, compose(gam, m), w, validate=validate)


def equalizer_agreement(M, N):
    """Cross-check: the image of m equals the kernel equalizer of
    (gamma_r (x) 1, 1 (x) gamma_l), by dimension and mutual containment."""
    w = M.over
    iN = identity(N.space)
    iM = identity(M.space)
    m = tensor_idempotent(M, N)
    f = tensor(gamma_r(M), iN)
    g = tensor(iM, gamma_l(N))
    # the pair is restricted to the subobject cut out by e_M (x) e_N
    ee = tensor(M.e, N.e)
    E, incl = equalizer(compose(f, ee), compose(g, ee))
    # restrict to kernel vectors fixed by ee (the ambient pair may equalize
    # outside the subobject when e is not the identity)
    fixed = [v for si in range(E.dim)
             for v in [incl.column(si)]
             if compose(ee, incl).column(si) == v]
    from weakhopf.linalg import split_idempotent
    P, _, sec = split_idempotent(m)
    rep = Report("equalizer-agreement")
    t0 = time.perf_counter()
    dims_match = (P.dim == len(fixed))
    rep.add("eq.dim", "rank m = dim equalizer", PASS if dims_match else FAIL,
            witness=None if dims_match else (str(P.dim), str(len(fixed)), "", ""))
    im_in_ker = compose(f, m) == compose(g, m)
    rep.add("eq.im.in.ker", "image(m) inside the equalizer",
            PASS if im_in_ker else FAIL)
    # kernel inside image(m): m fixes every equalizing vector of the subobject
    ker_in_im = all(
        {k: v for k, v in _apply_columns(m, vec).items()} == vec
        for vec in fixed)
    rep.add("eq.ker.in.im", "equalizer inside image(m)",
            PASS if ker_in_im else FAIL)
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return rep


def _apply_columns(f, vec):
    K = f.field
    out = {}
    cols = f.by_src()
    for si, v in vec.items():
        for (ti, w) in cols.get(si, ()):
            acc = K.add(out.get(ti, K.zero), K.mul(w, v))
            if acc == K.zero:
                out.pop(ti, None)
            else:
                out[ti] = acc
    return out


# ---------------------------------------------------------------------------
# unit isomorphisms M (x)_C C ~ M ~ C (x)_C M


def unit_iso_maps(M):
    "The four structural maps (phi, psi, phi', psi')."
    w = M.over
    A = w.carrier
    iA = identity(A)
    iM = identity(M.space)
    em = compose(w.epsilon, w.mu)
    # phi: M (x) C -> M
    phi = compose_all(tensor(M.gamma, iA), tensor_all(iM, iA, w.t),
                      tensor(iM, em))
    # psi: M -> M (x) C
    psi = gamma_r(M)
    # phi': C (x) M -> M
    phi_p = compose_all(tensor(iA, M.gamma),
                        tensor(iA, braiding_inv(M.space, A, w.chi)),
                        tensor_all(w.t, iA, iM), tensor(em, iM))
    # psi': M -> C (x) M
    psi_p = gamma_l(M)
    return phi, psi, phi_p, psi_p


def unit_isos(M):
    """Verify the four displayed unit isomorphisms: mutual inverses in the
    completion and comodule morphisms, plus the two auxiliary coaction
    identities used in their proof."""
    w = M.over
    A = w.carrier
    iA = identity(A)
    iM = identity(M.space)
    C = c_comodule(w)
    MC = tensor_over_C(M, C)
    CM = tensor_over_C(C, M)
    phi, psi, phi_p, psi_p = unit_iso_maps(M)
    rep = Report("unit-isos")
    t0 = time.perf_counter()
    rep.record("unit.r.retract", "phi.psi = 1_M", compose(phi, psi), M.e)
    rep.record("unit.r.section", "psi.phi = 1 on M(x)C",
               compose(psi, phi), MC.e)
    rep.record("unit.l.retract", "phi'.psi' = 1_M", compose(phi_p, psi_p), M.e)
    rep.record("unit.l.section", "psi'.phi' = 1 on C(x)M",
               compose(psi_p, phi_p), CM.e)
    rep.record("unit.r.phi.comod", "gamma.phi = (phi(x)1)gamma",
               compose(M.gamma, phi), compose(tensor(phi, iA), MC.gamma))
    rep.record("unit.r.psi.comod", "gamma.psi = (psi(x)1)gamma",
               compose(MC.gamma, psi), compose(tensor(psi, iA), M.gamma))
    rep.record("unit.l.phi.comod", "gamma.phi' = (phi'(x)1)gamma",
               compose(M.gamma, phi_p), compose(tensor(phi_p, iA), CM.gamma))
    rep.record("unit.l.psi.comod", "gamma.psi' = (psi'(x)1)gamma",
               compose(CM.gamma, psi_p), compose(tensor(psi_p, iA), M.gamma))
    # auxiliary identities for the coactions of M (x) C and C (x) M
    dt = compose(w.delta, w.t)
    lhs_i = compose_all(tensor(M.gamma, dt),
                        tensor_all(iM, braiding(A, A, w.chi), iA),
                        tensor_all(iM, iA, w.mu))
    rhs_i = compose_all(tensor(compose(tensor(M.gamma, iA), M.gamma), iA),
                        tensor_all(iM, w.t, compose(w.mu, tensor(iA, w.t))))
    rep.record("unit.aux.i", "coaction of M(x)C via the double coaction",
               lhs_i, rhs_i)
    lhs_ii = compose_all(tensor(dt, M.gamma),
                         tensor_all(iA, braiding(A, M.space, w.chi), iA),
                         tensor_all(iA, iM, w.mu))
    rhs_ii = compose_all(tensor(w.t, M.gamma),
                         tensor(braiding(A, M.space, w.chi), iA),
                         tensor(M.gamma, tensor(iA, iA)),
                         tensor(braiding_inv(M.space, A, w.chi), tensor(iA, iA)),
                         tensor_all(w.s, iM, w.mu))
    rep.record("unit.aux.ii", "coaction of C(x)M via the swapped coaction",
               lhs_ii, rhs_ii)
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return rep


def associativity_check(M, N, P):
    "The two bracketings of M (x)_C N (x)_C P carry equal idempotents."
    MN = tensor_over_C(M, N)
    NP = tensor_over_C(N, P)
    u = tensor_idempotent(MN, P)
    v = tensor_idempotent(M, NP)
    rep = Report("associativity")
    t0 = time.perf_counter()
    rep.record("assoc.uv", "(M(x)N)(x)P and M(x)(N(x)P) idempotents agree", u, v)
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return rep


# ---------------------------------------------------------------------------
# the forgetful functor to C-bicomodules is strong monoidal


def forgetful_strong_monoidal_check(M, N):
    """The bicomodule coaction of UM (x)_C UN equals the induced
    bicomodule coaction of U(M (x)_C N), entrywise."""
    w = M.over
    A = w.carrier
    iA = identity(A)
    iM = identity(M.space)
    iN = identity(N.space)
    T = tensor_over_C(M, N)
    lhs = compose_all(T.e,
                      tensor(gamma_l(M), iN),
                      tensor(iA, tensor(iM, gamma_r(N))))
    mn_space = M.space.tensor(N.space)
    rhs = compose_all(T.gamma,
                      tensor(identity(mn_space), w.delta),
                      tensor(braiding_inv(mn_space, A, w.chi), iA),
                      tensor_all(w.s, identity(mn_space), w.t))
    rep = Report("forgetful-strong-monoidal")
    t0 = time.perf_counter()
    rep.record("forget.eq", "UM (x)_C UN and U(M (x)_C N) coactions agree",
               lhs, rhs)
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return rep


# ---------------------------------------------------------------------------
# duals


def _transpose_endo(e, Xstar):
    "The dual endomap on X* (basis order of the dual mirrors the basis of X)."
    return LinMap(Xstar, Xstar, {(j, i): v for (i, j), v in e.entries.items()})


def dual_comodule(M, hopf):
    """The left dual comodule over a weak Hopf monoid, with evaluation into
    C and coevaluation out of C.  A comodule carried by (X, e) has dual
    carried by (X*, e*) with the cup and cap absorbed through e."""
    w = hopf.bimonoid
    nu = hopf.nu
    A = w.carrier
    iA = identity(A)
    iM = identity(M.space)
    Mstar, ev, coev = dual_space(M.space)
    iMs = identity(Mstar)
    e_star = _transpose_endo(M.e, Mstar)
    ev_q = compose(ev, tensor(iMs, M.e))
    coev_q = compose(tensor(M.e, iMs), coev)
    # coaction on M*: (ev (x) 1 (x) nu)(1 (x) 1 (x) c)(1 (x) gamma (x) 1)(1 (x) coev)
    gamma_star = compose_all(
        tensor(iMs, coev_q),
        tensor_all(iMs, M.gamma, iMs),
        tensor_all(iMs, iM, braiding(A, Mstar, w.chi)),
        tensor_all(ev_q, iMs, nu))
    Mdual = ComoduleData(Mstar, e_star, gamma_star, w)
    # e: M* (x) M -> C and n: C -> M (x) M*
    e_map = compose_all(tensor(iMs, M.gamma), tensor_all(ev_q, w.t))
    em_rt = compose_all(tensor(w.r, w.t), w.mu, w.epsilon)
    n_map = compose_all(tensor(coev_q, iA),
                        tensor_all(M.gamma, iMs, iA),
                        tensor_all(iM, braiding(A, Mstar, w.chi), iA),
                        tensor_all(iM, iMs, em_rt))
    return Mdual, e_map, n_map


def check_dual_pair(M, hopf):
    "Full dual-pair verification for a comodule over a weak Hopf monoid."
    w = hopf.bimonoid
    A = w.carrier
    iA = identity(A)
    iM = identity(M.space)
    Mdual, e_map, n_map = dual_comodule(M, hopf)
    iMs = identity(Mdual.space)
    C = c_comodule(w)
    MsM = tensor_over_C(Mdual, M)
    MMs = tensor_over_C(M, Mdual)
    rep = Report("dual-comodule")
    t0 = time.perf_counter()
    # e and n are morphisms in the completion with the C-typed boundary
    rep.record("dual.e.q", "t.e.m = e", compose_all(MsM.e, e_map, w.t), e_map)
    rep.record("dual.n.q", "m.n.t = n", compose_all(w.t, n_map, MMs.e), n_map)
    # comodule morphism conditions
    rep.record("dual.e.comod", "gamma_C.e = (e(x)1)gamma",
               compose(C.gamma, e_map), compose(tensor(e_map, iA), MsM.gamma))
    rep.record("dual.n.comod", "gamma.n = (n(x)1)gamma_C",
               compose(MMs.gamma, n_map), compose(tensor(n_map, iA), C.gamma))
    # triangle identities through the unit isomorphisms
    phiM, psiM, phiM_p, psiM_p = unit_iso_maps(M)
    phiS, psiS, phiS_p, psiS_p = unit_iso_maps(Mdual)
    tri1 = compose_all(psiM_p, tensor(n_map, iM), tensor_all(iM, e_map), phiM)
    rep.record("dual.tri.i", "(1(x)e)(n(x)1) = 1_M through the unit isos",
               tri1, M.e)
    tri2 = compose_all(psiS, tensor(iMs, n_map), tensor(e_map, iMs), phiS_p)
    rep.record("dual.tri.ii", "(e(x)1)(1(x)n) = 1_M* through the unit isos",
               tri2, Mdual.e)
    rep.elapsed_ms = (time.perf_counter() - t0) * 1000.0
    return rep
