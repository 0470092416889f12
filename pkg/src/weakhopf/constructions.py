"""Builders for the concrete models: category and groupoid algebras,
standard separable Frobenius monoids, and the double R (x) R of a
separable Frobenius monoid.

Multiplication convention for category algebras: f . g = (g after f),
i.e. mu(f (x) g) is the arrow "g composed on f" when it exists and 0
otherwise.
"""

from __future__ import annotations

from fractions import Fraction

from weakhopf.linalg import (
    QQ, Bicharacter, Space, LinMap, compose, compose_all, tensor,
    tensor_all, identity, braiding, braiding_inv,
)
from weakhopf.structures import (
    FrobeniusData, WeakBimonoidData, WeakHopfData, is_separable,
    check_weak_bimonoid, check_monoid, check_comonoid,
)
from weakhopf.report import Report, PASS, FAIL


class InvalidPresentation(Exception):
    pass


class NotAGroupoid(Exception):
    pass


class BadCharacteristic(Exception):
    pass


class NotSeparable(Exception):
    pass


class FiniteCategoryPresentation:
    """Objects, non-identity morphisms and a composition table.

    `morphisms` lists (name, src, tgt); identities are implicit and named
    id_<object>.  `compose` maps (g, f) with src(g) = tgt(f) to the name
    of the composite g after f; pairs involving identities may be omitted.
    An optional `inverse` table (per-arrow) marks a groupoid.
    """

    def __init__(self, objects, morphisms, compose_table, inverse=None):
        self.objects = list(objects)
        self.morphisms = list(morphisms)
        self.compose_table = dict(compose_table)
        self.inverse = dict(inverse) if inverse is not None else None
        names = [m[0] for m in self.morphisms]
        if len(set(names)) != len(names):
            raise InvalidPresentation("duplicate morphism names")
        if len(set(self.objects)) != len(self.objects):
            raise InvalidPresentation("duplicate object names")
        for name in names:
            if name.startswith("id_"):
                raise InvalidPresentation("identity names are implicit")

    def id_name(self, obj):
        return "id_" + obj

    def arrows(self):
        "All arrows (name, src, tgt), identities first in object order."
        out = [(self.id_name(o), o, o) for o in self.objects]
        out.extend(self.morphisms)
        return out

    def boundaries(self):
        return {name: (src, tgt) for name, src, tgt in self.arrows()}

    def composite(self, g, f):
        """Name of g after f, or None when not composable.  Identity
        absorption is automatic."""
        bounds = self.boundaries()
        if g not in bounds or f not in bounds:
            raise InvalidPresentation("unknown arrow in composite request")
        fs, ft = bounds[f]
        gs, gt = bounds[g]
        if ft != gs:
            return None
        if f == self.id_name(fs):
            return g
        if g == self.id_name(gs):
            return f
        if (g, f) not in self.compose_table:
            raise InvalidPresentation("missing composite for (%s, %s)" % (g, f))
        return self.compose_table[(g, f)]


def validate_category(pres):
    """Totality, identity and associativity verdicts, plus the groupoid
    flag when an inverse table is present and valid."""
    rep = Report("category-presentation")
    bounds = pres.boundaries()
    arrows = list(bounds)

    ok = True
    detail = None
    try:
        for g in arrows:
            for f in arrows:
                if bounds[f][1] == bounds[g][0]:
                    h = pres.composite(g, f)
                    hs, ht = bounds[h]
                    if hs != bounds[f][0] or ht != bounds[g][1]:
                        ok, detail = False, ("boundary", g, f)
    except InvalidPresentation as exc:
        ok, detail = False, ("missing", str(exc))
    rep.add("cat.total", "composition total on composable pairs",
            PASS if ok else FAIL,
            witness=None if ok else (str(detail), "", "", ""))

    ok = True
    for name, src, tgt in pres.arrows():
        if pres.composite(name, pres.id_name(src)) != name:
            ok = False
        if pres.composite(pres.id_name(tgt), name) != name:
            ok = False
    rep.add("cat.identity", "identity laws", PASS if ok else FAIL)

    ok = True
    witness = None
    for h in arrows:
        for g in arrows:
            if bounds[g][1] != bounds[h][0]:
                continue
            hg = pres.composite(h, g)
            for f in arrows:
                if bounds[f][1] != bounds[g][0]:
                    continue
                gf = pres.composite(g, f)
                if pres.composite(h, gf) != pres.composite(hg, f):
                    ok = False
                    if witness is None:
                        witness = ("(%s,%s,%s)" % (h, g, f), "",
                                   str(pres.composite(h, gf)),
                                   str(pres.composite(hg, f)))
    rep.add("cat.assoc", "associativity on composable triples",
            PASS if ok else FAIL, witness=witness)

    if pres.inverse is not None:
        ok = set(pres.inverse) == {m[0] for m in pres.morphisms}
        if ok:
            for name, src, tgt in pres.morphisms:
                inv = pres.inverse[name]
                if bounds.get(inv) != (tgt, src):
                    ok = False
                    break
                if pres.composite(inv, name) != pres.id_name(src):
                    ok = False
                if pres.composite(name, inv) != pres.id_name(tgt):
                    ok = False
        rep.add("cat.groupoid", "inverse table valid", PASS if ok else FAIL)
    return rep


def _basis_space(field, names):
    return Space.atoms(field, names)


def category_algebra(pres, field=QQ):
    """The category algebra on basis all arrows: mu(f (x) g) = g after f
    when defined (else 0), eta = sum of identities, delta(f) = f (x) f,
    eps(f) = 1.  Trivial grading."""
    rep = validate_category(pres)
    if not rep.ok():
        raise InvalidPresentation("presentation fails validation")
    arrows = pres.arrows()
    names = [a[0] for a in arrows]
    A = _basis_space(field, names)
    chi = Bicharacter.trivial(field)
    I = Space.unit(field)
    AA = A.tensor(A)
    one = field.one

    mu_entries = {}
    for i, (f, _, _) in enumerate(arrows):
        for j, (g, _, _) in enumerate(arrows):
            h = pres.composite(g, f)
            if h is not None:
                mu_entries[(A.index[(h,)], i * A.dim + j)] = one
    mu = LinMap(AA, A, mu_entries)
    eta = LinMap(I, A, {(A.index[(pres.id_name(o),)], 0): one
                        for o in pres.objects})
    delta = LinMap(A, AA, {(i * A.dim + i, i): one for i in range(A.dim)})
    eps = LinMap(A, I, {(0, i): one for i in range(A.dim)})
    return WeakBimonoidData(A, mu, eta, delta, eps, chi)


def groupoid_algebra(pres, field=QQ):
    "Category algebra plus the inverse-map antipode."
    if pres.inverse is None or not validate_category(pres).ok():
        raise NotAGroupoid("presentation is not a valid groupoid")
    w = category_algebra(pres, field)
    A = w.carrier
    inv = dict(pres.inverse)
    for o in pres.objects:
        inv[pres.id_name(o)] = pres.id_name(o)
    nu = LinMap(A, A, {(A.index[(inv[name],)], A.index[(name,)]): field.one
                       for (name,) in (b[0] for b in A.basis)})
    return WeakHopfData(w, nu, nu_inv=nu)


def functions_frobenius(n, field=QQ):
    """Functions on n points: pointwise product, delta(e_i) = e_i (x) e_i,
    eps(e_i) = 1.  Separable."""
    names = ["e%d" % i for i in range(n)]
    R = _basis_space(field, names)
    chi = Bicharacter.trivial(field)
    I = Space.unit(field)
    one = field.one
    mu = LinMap(R.tensor(R), R, {(i, i * n + i): one for i in range(n)})
    eta = LinMap(I, R, {(i, 0): one for i in range(n)})
    delta = LinMap(R, R.tensor(R), {(i * n + i, i): one for i in range(n)})
    eps = LinMap(R, I, {(0, i): one for i in range(n)})
    return FrobeniusData(R, mu, eta, delta, eps, chi)


def group_frobenius(elements, table, field=QQ, unit=None):
    """Group algebra with the 1/|G|-scaled coproduct, so mu.delta = 1.

    `table` maps (g, h) to gh.  Requires char(field) not dividing |G|.
    """
    n = len(elements)
    if field.char and n % field.char == 0:
        raise BadCharacteristic("|G| vanishes in the field")
    if unit is None:
        unit = elements[0]
    inv = {}
    for g in elements:
        for h in elements:
            if table[(g, h)] == unit:
                inv[g] = h
    R = _basis_space(field, list(elements))
    chi = Bicharacter.trivial(field)
    I = Space.unit(field)
    one = field.one
    idx = {g: R.index[(g,)] for g in elements}
    mu = LinMap(R.tensor(R), R,
                {(idx[table[(g, h)]], idx[g] * n + idx[h]): one
                 for g in elements for h in elements})
    eta = LinMap(I, R, {(idx[unit], 0): one})
    scale = field.inv(field.of(n))
    delta_entries = {}
    for g in elements:
        for h in elements:
            # delta(g) = (1/|G|) sum_h h (x) h^-1 g
            delta_entries[(idx[h] * n + idx[table[(inv[h], g)]], idx[g])] = scale
    delta = LinMap(R, R.tensor(R), delta_entries)
    eps = LinMap(R, I, {(0, idx[unit]): field.of(n)})
    return FrobeniusData(R, mu, eta, delta, eps, chi)


def cyclic_group_frobenius(n, field=QQ):
    elements = ["g%d" % k for k in range(n)]
    table = {("g%d" % a, "g%d" % b): "g%d" % ((a + b) % n)
             for a in range(n) for b in range(n)}
    return group_frobenius(elements, table, field, unit="g0")


def matrix_frobenius(n, weights=None, field=QQ):
    """The n x n matrix algebra with the Frobenius form a |-> tr(u a) for
    u = diag(weights); separable when sum(1/w_i) = 1.  With unequal
    weights the form is non-symmetric, which exercises the twist appearing
    in the antipode of the double."""
    if weights is None:
        # any solution of sum 1/w_i = 1 with distinct entries
        weights = [Fraction(n + 1)] * (n - 1) + [Fraction(n + 1, 2)] if n > 1 \
            else [Fraction(1)]
    w = [field.of(x) for x in weights]
    total = field.zero
    for x in w:
        total = field.add(total, field.inv(x))
    if total != field.one:
        raise NotSeparable("weights must satisfy sum(1/w_i) = 1")
    names = ["E%d%d" % (i, j) for i in range(n) for j in range(n)]
    R = _basis_space(field, names)
    chi = Bicharacter.trivial(field)
    I = Space.unit(field)
    one = field.one
    d = R.dim
    eix = {(i, j): R.index[("E%d%d" % (i, j),)] for i in range(n) for j in range(n)}
    mu_entries = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        mu_entries[(eix[(i, l)], eix[(i, j)] * d + eix[(k, l)])] = one
    mu = LinMap(R.tensor(R), R, mu_entries)
    eta = LinMap(I, R, {(eix[(i, i)], 0): one for i in range(n)})
    # eps(E_ij) = tr(u E_ij) = u_jj [i = j]
    eps = LinMap(R, I, {(0, eix[(i, i)]): w[i] for i in range(n)})
    # delta(a) = sum_ij a E_ij (x) u^-1 E_ji
    delta_entries = {}
    for p in range(n):
        for q in range(n):
            # delta(E_pq) = sum_j E_pj (x) u_j^-1 E_jq
            for j in range(n):
                key = (eix[(p, j)] * d + eix[(j, q)], eix[(p, q)])
                delta_entries[key] = field.inv(w[j])
    delta = LinMap(R, R.tensor(R), delta_entries)
    return FrobeniusData(R, mu, eta, delta, eps, chi)


# ---------------------------------------------------------------------------
# the double of a separable Frobenius monoid


def _curl_left(fr):
    """The left-loop twist on R: insert the self-duality cap on the left,
    braid the new strand over the incoming one, close with the cup.
    (e (x) 1)(1 (x) c)(n (x) 1) with e = eps.mu and n = delta.eta."""
    R = fr.carrier
    iR = identity(R)
    e = fr.sigma
    n = fr.rho
    c = braiding(R, R, fr.chi)
    return compose_all(tensor(n, iR), tensor(iR, c), tensor(e, iR))


def _curl_right(fr):
    "(1 (x) e)(c (x) 1)(1 (x) n): the inverse twist."
    R = fr.carrier
    iR = identity(R)
    e = fr.sigma
    n = fr.rho
    c = braiding(R, R, fr.chi)
    return compose_all(tensor(iR, n), tensor(c, iR), tensor(iR, e))


def frobenius_square(fr):
    """The double R (x) R of a separable Frobenius monoid as a weak Hopf
    monoid: comonoid via the comonad of the self-adjunction, monoid the
    opposite-times-ordinary product, antipode the braiding followed by the
    twist on the looped strand."""
    if not is_separable(fr):
        raise NotSeparable("mu.delta must be the identity")
    R = fr.carrier
    chi = fr.chi
    iR = identity(R)
    A = R.tensor(R)
    c = braiding(R, R, chi)
    cinv = braiding_inv(R, R, chi)

    delta_A = tensor_all(iR, fr.rho, iR)
    eps_A = fr.sigma
    mu_A = compose_all(tensor_all(iR, c, iR), tensor(c, tensor(iR, iR)),
                       tensor(fr.mu, fr.mu))
    eta_A = tensor(fr.eta, fr.eta)
    w = WeakBimonoidData(A, mu_A, eta_A, delta_A, eps_A, chi)

    nu = compose(tensor(_curl_left(fr), iR), c)
    nu_inv = compose(tensor(iR, _curl_right(fr)), cinv)
    return WeakHopfData(w, nu, nu_inv=nu_inv)


def closed_forms_rt(fr):
    """The simplified forms of r and t on the double: r = (mu.nu) (x) eta
    and t = eta (x) mu."""
    R = fr.carrier
    iR = identity(R)
    c = braiding(R, R, fr.chi)
    nu = compose(tensor(_curl_left(fr), iR), c)
    r_closed = tensor(compose(fr.mu, nu), fr.eta)
    t_closed = tensor(fr.eta, fr.mu)
    return r_closed, t_closed
