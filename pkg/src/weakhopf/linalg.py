"""Exact sparse linear algebra on graded vector spaces.

Scalars live in an exact field (rationals or a prime field), spaces carry
a grading by a finite product of cyclic groups, and every linear map is
grade-preserving.  Basis labels of tensor products are flat tuples of
atomic labels, so the tensor product is strictly associative and strictly
unital on the nose: X (*) I == X and (X*Y)*Z == X*(Y*Z) as Space values.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


class DomainMismatch(Exception):
    pass


class GradeOutsideGroup(Exception):
    pass


class NotIdempotent(Exception):
    pass


# ---------------------------------------------------------------------------
# fields


class Field:
    """An exact field.  Scalars are plain python values (Fraction or int)."""

    def __init__(self, char, name):
        self.char = char
        self.name = name

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self):
        return hash(self.name)


class _RationalField(Field):
    def __init__(self):
        Field.__init__(self, 0, "Q")

    def of(self, x):
        return Fraction(x)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def parse(self, s):
        return Fraction(s)

    def show(self, a):
        return str(a)


class _PrimeField(Field):
    def __init__(self, p):
        if p < 2 or p >= 2**31 or any(p % q == 0 for q in range(2, min(p, 46341))
                                      if q * q <= p):
            raise ValueError("modulus must be prime and < 2^31: %r" % (p,))
        Field.__init__(self, p, "F%d" % p)
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def of(self, x):
        if isinstance(x, Fraction):
            return self.mul(x.numerator % self.p, self.inv(x.denominator % self.p))
        return x % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def parse(self, s):
        return self.of(Fraction(s))

    def show(self, a):
        return str(a)


QQ = _RationalField()

_gf_cache = {}


def GF(p):
    """The prime field F_p (cached)."""
    if p not in _gf_cache:
        _gf_cache[p] = _PrimeField(p)
    return _gf_cache[p]


# ---------------------------------------------------------------------------
# grading and braiding data

TRIVIAL_GRADE = ()


def _check_grade(group, grade):
    if len(grade) != len(group) or any(not (0 <= g < n) for g, n in zip(grade, group)):
        raise GradeOutsideGroup("grade %r outside group %r" % (grade, group))


def grade_add(group, a, b):
    return tuple((x + y) % n for x, y, n in zip(a, b, group))


def grade_neg(group, a):
    return tuple((-x) % n for x, n in zip(a, group))


def all_grades(group):
    return [tuple(g) for g in itertools.product(*[range(n) for n in group])]


class Bicharacter:
    """A bicharacter chi: G x G -> K^* on G = Z/n1 x ... x Z/nk.

    The value table is total on G x G; multiplicativity in each argument
    is checked by full enumeration (G is finite).
    """

    def __init__(self, field, group, table=None, validate=True):
        self.field = field
        self.group = tuple(group)
        if table is None:
            table = {(a, b): field.one
                     for a in all_grades(self.group) for b in all_grades(self.group)}
        self.table = dict(table)
        if validate:
            self.validate()

    @staticmethod
    def trivial(field):
        return Bicharacter(field, ())

    @staticmethod
    def from_generator_matrix(field, group, vals):
        """chi(e_i, e_j) = vals[i][j] extended multiplicatively; each
        vals[i][j] must have multiplicative order dividing gcd-compatible
        moduli (checked by validate)."""
        table = {}
        for a in all_grades(group):
            for b in all_grades(group):
                v = field.one
                for i, ai in enumerate(a):
                    for j, bj in enumerate(b):
                        for _ in range(ai * bj):
                            v = field.mul(v, vals[i][j])
                table[(a, b)] = v
        return Bicharacter(field, group, table)

    def validate(self):
        K = self.field
        grades = all_grades(self.group)
        for a in grades:
            for b in grades:
                if (a, b) not in self.table:
                    raise ValueError("bicharacter table not total at %r" % ((a, b),))
                if self.table[(a, b)] == K.zero:
                    raise ValueError("bicharacter value must be nonzero")
        for a in grades:
            for b in grades:
                for c in grades:
                    ab = grade_add(self.group, a, b)
                    if self.table[(ab, c)] != K.mul(self.table[(a, c)], self.table[(b, c)]):
                        raise ValueError("not multiplicative in first argument")
                    bc = grade_add(self.group, b, c)
                    if self.table[(a, bc)] != K.mul(self.table[(a, b)], self.table[(a, c)]):
                        raise ValueError("not multiplicative in second argument")

    def value(self, a, b):
        _check_grade(self.group, a)
        _check_grade(self.group, b)
        return self.table[(a, b)]

    def value_inv(self, a, b):
        return self.field.inv(self.value(a, b))


# ---------------------------------------------------------------------------
# spaces

class Space:
    """A graded space with an ordered basis.

    Basis labels are tuples of atomic strings; the empty tuple is reserved
    for the basis vector of the monoidal unit.  Tensoring concatenates
    label tuples, which makes the monoidal structure strict.
    """

    def __init__(self, field, group, basis, _trusted=False):
        self.field = field
        self.group = tuple(group)
        if _trusted:
            self.basis = basis
        else:
            self.basis = [(tuple(lbl), tuple(gr)) for lbl, gr in basis]
            for lbl, gr in self.basis:
                _check_grade(self.group, gr)
        self.index = {lbl: i for i, (lbl, _) in enumerate(self.basis)}
        if len(self.index) != len(self.basis):
            raise ValueError("duplicate basis labels")
        self.dim = len(self.basis)
        self._tensor_cache = {}
        self._hash = None

    @staticmethod
    def atoms(field, names, grades=None, group=()):
        """Space on atomic labels; grades default to the trivial grade."""
        if grades is None:
            grades = [TRIVIAL_GRADE] * len(names)
            group = ()
        return Space(field, group, [((n,), g) for n, g in zip(names, grades)])

    @staticmethod
    def unit(field, group=()):
        return Space(field, group, [((), tuple(0 for _ in group))])

    def grade(self, i):
        return self.basis[i][1]

    def label(self, i):
        return self.basis[i][0]

    def label_str(self, i):
        lbl = self.basis[i][0]
        return "1" if lbl == () else "(x)".join(lbl)

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, Space) and self.field == other.field
                and self.group == other.group and self.dim == other.dim
                and self.basis == other.basis)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.group, tuple(self.basis)))
        return self._hash

    def __repr__(self):
        return "Space(%s, dim=%d)" % (self.field, self.dim)

    def tensor(self, other):
        cached = self._tensor_cache.get(id(other))
        if cached is not None and cached[0] is other:
            return cached[1]
        if self.field != other.field or self.group != other.group:
            raise DomainMismatch("tensor factors over different field/group")
        if not self.group:
            basis = [(l1 + l2, ()) for l1, _ in self.basis for l2, _ in other.basis]
        else:
            n = self.group
            basis = [(l1 + l2, tuple((x + y) % m for x, y, m in zip(g1, g2, n)))
                     for l1, g1 in self.basis for l2, g2 in other.basis]
        out = Space(self.field, self.group, basis, _trusted=True)
        # keep a strong reference to the right factor so the id stays valid
        self._tensor_cache[id(other)] = (other, out)
        return out

    def is_unit_compatible(self):
        return self.dim == 1 and self.basis[0][0] == ()


def tensor_spaces(*spaces):
    out = spaces[0]
    for sp in spaces[1:]:
        out = out.tensor(sp)
    return out


# ---------------------------------------------------------------------------
# linear maps

class LinMap:
    """A grade-preserving linear map given by sparse entries
    (target-index, source-index) -> nonzero scalar."""

    __slots__ = ("src", "tgt", "entries", "_by_src")

    def __init__(self, src, tgt, entries, validate=True):
        self.src = src
        self.tgt = tgt
        K = src.field
        self.entries = {k: v for k, v in entries.items() if v != K.zero}
        self._by_src = None
        if validate:
            if src.field != tgt.field or src.group != tgt.group:
                raise DomainMismatch("src/tgt over different field or group")
            for (ti, si) in self.entries:
                if not (0 <= ti < tgt.dim and 0 <= si < src.dim):
                    raise ValueError("entry index out of range")
                if tgt.grade(ti) != src.grade(si):
                    raise ValueError(
                        "map is not grade-preserving at (%s, %s)"
                        % (tgt.label_str(ti), src.label_str(si)))

    @property
    def field(self):
        return self.src.field

    def by_src(self):
        if self._by_src is None:
            cols = {}
            for (ti, si), v in self.entries.items():
                cols.setdefault(si, []).append((ti, v))
            self._by_src = cols
        return self._by_src

    def __eq__(self, other):
        return (isinstance(other, LinMap) and self.src == other.src
                and self.tgt == other.tgt and self.entries == other.entries)

    def __hash__(self):
        return hash((self.src, self.tgt, tuple(sorted(self.entries.items()))))

    def __repr__(self):
        return "LinMap(%d x %d, nnz=%d)" % (self.tgt.dim, self.src.dim, len(self.entries))

    def is_zero(self):
        return not self.entries

    def __add__(self, other):
        if self.src != other.src or self.tgt != other.tgt:
            raise DomainMismatch("sum of maps with different boundaries")
        K = self.field
        out = dict(self.entries)
        for k, v in other.entries.items():
            w = K.add(out.get(k, K.zero), v)
            if w == K.zero:
                out.pop(k, None)
            else:
                out[k] = w
        return LinMap(self.src, self.tgt, out, validate=False)

    def __sub__(self, other):
        return self + other.scale(self.field.neg(self.field.one))

    def scale(self, c):
        K = self.field
        if c == K.zero:
            return LinMap(self.src, self.tgt, {}, validate=False)
        return LinMap(self.src, self.tgt,
                      {k: K.mul(c, v) for k, v in self.entries.items()},
                      validate=False)

    def __mul__(self, other):
        "self * other = compose(self, other)"
        return compose(self, other)

    def column(self, si):
        return {ti: v for (ti, sj), v in self.entries.items() if sj == si}

    def first_difference(self, other):
        """First (row-major) basis pair where the two maps differ, with both
        scalar values; None when equal."""
        K = self.field
        keys = set(self.entries) | set(other.entries)
        for ti, si in sorted(keys):
            a = self.entries.get((ti, si), K.zero)
            b = other.entries.get((ti, si), K.zero)
            if a != b:
                return (self.tgt.label_str(ti), self.src.label_str(si),
                        K.show(a), K.show(b))
        return None


def zero_map(src, tgt):
    return LinMap(src, tgt, {}, validate=False)


def identity(space):
    K = space.field
    return LinMap(space, space, {(i, i): K.one for i in range(space.dim)},
                  validate=False)


def compose(g, f):
    "The composite g o f (apply f first)."
    if f.tgt != g.src:
        raise DomainMismatch("compose: middle boundary differs")
    K = f.field
    cols = g.by_src()
    out = {}
    for (ki, si), v in f.entries.items():
        for (ti, w) in cols.get(ki, ()):
            key = (ti, si)
            acc = K.add(out.get(key, K.zero), K.mul(w, v))
            if acc == K.zero:
                out.pop(key, None)
            else:
                out[key] = acc
    return LinMap(f.src, g.tgt, out, validate=False)


def compose_all(*maps):
    "compose_all(f1, f2, ..., fn) applies f1 first."
    out = maps[0]
    for f in maps[1:]:
        out = compose(f, out)
    return out


def tensor(f, g):
    """Kronecker product with the left factor major.  No braiding signs
    enter: both factors are grade-preserving, so the interchange law is
    strict."""
    src = f.src.tensor(g.src)
    tgt = f.tgt.tensor(g.tgt)
    K = f.field
    one = K.one
    mul = K.mul
    out = {}
    gs, gt = g.src.dim, g.tgt.dim
    gitems = list(g.entries.items())
    for (ti, si), v in f.entries.items():
        trow = ti * gt
        srow = si * gs
        if v == one:
            for (tj, sj), w in gitems:
                out[(trow + tj, srow + sj)] = w
        else:
            for (tj, sj), w in gitems:
                out[(trow + tj, srow + sj)] = v if w == one else mul(v, w)
    return LinMap(src, tgt, out, validate=False)


def tensor_all(*maps):
    out = maps[0]
    for f in maps[1:]:
        out = tensor(out, f)
    return out


def braiding(X, Y, chi):
    """c_{X,Y}: X (*) Y -> Y (*) X, (x,y) |-> chi(|x|,|y|) (y,x).
    Drawn as a left-over-right crossing."""
    src = X.tensor(Y)
    tgt = Y.tensor(X)
    out = {}
    for i in range(X.dim):
        for j in range(Y.dim):
            v = chi.value(X.grade(i), Y.grade(j))
            out[(j * X.dim + i, i * Y.dim + j)] = v
    return LinMap(src, tgt, out, validate=False)


def braiding_inv(X, Y, chi):
    """The inverse braiding as a crossing X (*) Y -> Y (*) X, i.e. the
    inverse of c_{Y,X}; drawn as a right-over-left crossing.  Satisfies
    braiding_inv(Y, X) o braiding(X, Y) = id."""
    src = X.tensor(Y)
    tgt = Y.tensor(X)
    out = {}
    for i in range(X.dim):
        for j in range(Y.dim):
            v = chi.value_inv(Y.grade(j), X.grade(i))
            out[(j * X.dim + i, i * Y.dim + j)] = v
    return LinMap(src, tgt, out, validate=False)


def dual_space(X):
    """Left dual (X*, e, n): e: X* (*) X -> I sends (x_i*, x_j) to delta_ij,
    n: I -> X (*) X* sends 1 to sum_i x_i (*) x_i*.  Atom order reverses
    and grades negate, so e and n are grade-preserving and both triangle
    equalities hold without any braiding."""
    K = X.field
    basis = []
    for lbl, gr in X.basis:
        dlbl = tuple(a + "*" for a in reversed(lbl)) if lbl else ("I*",)
        basis.append((dlbl, grade_neg(X.group, gr)))
    Xstar = Space(K, X.group, basis)
    I = Space.unit(K, X.group)
    e = LinMap(Xstar.tensor(X), I,
               {(0, i * X.dim + i): K.one for i in range(X.dim)}, validate=False)
    n = LinMap(I, X.tensor(Xstar),
               {(i * X.dim + i, 0): K.one for i in range(X.dim)}, validate=False)
    return Xstar, e, n


# ---------------------------------------------------------------------------
# exact elimination: idempotent splitting and equalizers

def _grade_blocks(space):
    blocks = {}
    for i, (_, gr) in enumerate(space.basis):
        blocks.setdefault(gr, []).append(i)
    return blocks


def _dense_columns(f, rows, cols):
    K = f.field
    mat = [[K.zero] * len(cols) for _ in rows]
    rpos = {r: i for i, r in enumerate(rows)}
    cpos = {c: j for j, c in enumerate(cols)}
    for (ti, si), v in f.entries.items():
        if ti in rpos and si in cpos:
            mat[rpos[ti]][cpos[si]] = v
    return mat


def _rref(K, mat):
    """In-place reduced row echelon form over the exact field K; returns the
    list of pivot column indices."""
    if not mat:
        return []
    nrows, ncols = len(mat), len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if mat[i][c] != K.zero:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = K.inv(mat[r][c])
        mat[r] = [K.mul(inv, x) for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != K.zero:
                coef = mat[i][c]
                mat[i] = [K.sub(x, K.mul(coef, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _nullspace(K, mat, ncols):
    "Basis of the kernel of the dense matrix (list of coefficient dicts)."
    work = [row[:] for row in mat]
    pivots = _rref(K, work)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = {fc: K.one}
        for r, pc in enumerate(pivots):
            coef = work[r][fc] if r < len(work) else K.zero
            if coef != K.zero:
                vec[pc] = K.neg(coef)
        basis.append(vec)
    return basis


def split_idempotent(e):
    """Split an idempotent e: X -> X exactly.

    Returns (P, retract, section) with section o retract = e and
    retract o section = id_P.  P has one basis vector per pivot column of
    e (computed per grade block), inheriting that column's grade.
    """
    if e.src != e.tgt:
        raise NotIdempotent("not an endomap")
    if compose(e, e) != e:
        raise NotIdempotent("e o e != e")
    X = e.src
    K = X.field
    chosen = []   # (source column index, dense column vector over block rows)
    blocks = _grade_blocks(X)
    sec_entries = {}
    basis = []
    # column-space basis per grade block
    col_data = []
    for gr in sorted(blocks):
        rows = blocks[gr]
        cols = blocks[gr]
        mat = _dense_columns(e, rows, cols)
        # pivot columns of e restricted to the block
        work = [row[:] for row in mat]
        pivots = _rref(K, work)
        for pc in pivots:
            pi = len(basis)
            si = cols[pc]
            lbl = ("p%d[%s]" % (pi, X.label_str(si)),)
            basis.append((lbl, gr))
            col = {rows[i]: mat[i][pc] for i in range(len(rows))
                   if mat[i][pc] != K.zero}
            col_data.append((gr, rows, cols, mat, pc))
            for ti, v in col.items():
                sec_entries[(ti, pi)] = v
    P = Space(K, X.group, basis)
    section = LinMap(P, X, sec_entries, validate=False)
    # retract: solve S . r_col = e_col for every source column of e
    ret_entries = {}
    # group chosen columns per grade for solving
    per_grade = {}
    for pi, (gr, rows, cols, mat, pc) in enumerate(col_data):
        per_grade.setdefault(gr, []).append((pi, pc))
    for gr, rows in ((g, blocks[g]) for g in sorted(blocks)):
        chosen_here = per_grade.get(gr, [])
        if not chosen_here:
            continue
        cols = blocks[gr]
        mat = _dense_columns(e, rows, cols)
        ncols = len(chosen_here)
        # augmented system [S | e-columns]
        aug = [[mat[i][pc] for (_, pc) in chosen_here] +
               [mat[i][c] for c in range(len(cols))] for i in range(len(rows))]
        pivots = _rref(K, aug)
        for r, pc in enumerate(pivots):
            if pc >= ncols:
                raise NotIdempotent("column space inconsistency")
        for j, c in enumerate(range(ncols, ncols + len(cols))):
            for r, pc in enumerate(pivots):
                v = aug[r][c]
                if v != K.zero:
                    pi = chosen_here[pc][0]
                    ret_entries[(pi, cols[j])] = v
    retract = LinMap(X, P, ret_entries, validate=False)
    assert compose(section, retract) == e
    assert compose(retract, section) == identity(P)
    return P, retract, section


def equalizer(f, g):
    """The equalizer of a parallel pair, computed as the kernel of f - g.

    Returns (E, incl) with incl injective, f o incl = g o incl, and E of
    maximal dimension.
    """
    if f.src != g.src or f.tgt != g.tgt:
        raise DomainMismatch("equalizer of non-parallel maps")
    d = f - g
    X = f.src
    K = X.field
    basis = []
    incl_entries = {}
    for gr, cols in sorted(_grade_blocks(X).items()):
        rows = [i for i, (_, rg) in enumerate(d.tgt.basis) if rg == gr]
        mat = _dense_columns(d, rows, cols)
        for vec in _nullspace(K, mat, len(cols)):
            ei = len(basis)
            basis.append((("e%d" % ei,), gr))
            for cj, v in vec.items():
                incl_entries[(cols[cj], ei)] = v
    E = Space(K, X.group, basis)
    incl = LinMap(E, X, incl_entries, validate=False)
    return E, incl


def image_in(f, vectors):
    """Does every sparse column vector (dict tgt-index -> scalar) of
    `vectors` lie in the column space of f?  Exact membership test."""
    K = f.field
    rows = sorted({ti for (ti, _) in f.entries} |
                  {ti for vec in vectors for ti in vec})
    if not rows:
        return True
    rpos = {r: i for i, r in enumerate(rows)}
    ncols = f.src.dim
    mat = [[K.zero] * ncols for _ in rows]
    for (ti, si), v in f.entries.items():
        mat[rpos[ti]][si] = v
    for vec in vectors:
        aug = [row[:] + [K.zero] for row in mat]
        for ti, v in vec.items():
            aug[rpos[ti]][ncols] = v
        pivots = _rref(K, aug)
        if ncols in pivots:
            return False
    return True
