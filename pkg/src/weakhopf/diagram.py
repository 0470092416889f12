"""A term language for string diagrams and its evaluator into LinMap.

Terms are built from named generators, identities, composition (top to
bottom), tensoring (left to right), block braidings and duality cups/caps.
Evaluation resolves object names against an environment, so a single term
serves every concrete model.
"""

from __future__ import annotations

from weakhopf import linalg
from weakhopf.linalg import (
    LinMap, Space, DomainMismatch, identity, compose, tensor,
    tensor_spaces, dual_space,
)


class UnknownName(Exception):
    pass


class BoundaryMismatch(Exception):
    pass


def _word(obj):
    "Normalize an object expression to a tuple of object names."
    if isinstance(obj, str):
        return (obj,)
    return tuple(obj)


class MorExpr:
    "Base class of diagram terms."

    def __repr__(self):
        return self.show()

    def show(self):
        raise NotImplementedError


class Gen(MorExpr):
    def __init__(self, name):
        self.name = name

    def show(self):
        return self.name


class Id(MorExpr):
    "Identity on a tensor word of objects; Id(()) is the unit object."

    def __init__(self, obj):
        self.obj = _word(obj)

    def show(self):
        return "1[%s]" % ",".join(self.obj)


class Compose(MorExpr):
    "Compose(items): items[0] applied first (diagram read top to bottom)."

    def __init__(self, items):
        if not items:
            raise ValueError("Compose of nothing")
        self.items = list(items)

    def show(self):
        return "(" + " ; ".join(t.show() for t in self.items) + ")"


class Tensor(MorExpr):
    def __init__(self, items):
        if not items:
            raise ValueError("Tensor of nothing")
        self.items = list(items)

    def show(self):
        return "(" + " @ ".join(t.show() for t in self.items) + ")"


class Braid(MorExpr):
    "Block braiding c: X (*) Y -> Y (*) X, left over right."

    def __init__(self, a, b):
        self.a = _word(a)
        self.b = _word(b)

    def show(self):
        return "c[%s|%s]" % (",".join(self.a), ",".join(self.b))


class BraidInv(MorExpr):
    "Inverse block braiding X (*) Y -> Y (*) X, right over left."

    def __init__(self, a, b):
        self.a = _word(a)
        self.b = _word(b)

    def show(self):
        return "c~[%s|%s]" % (",".join(self.a), ",".join(self.b))


class Eval(MorExpr):
    "Evaluation e: X* (*) X -> I."

    def __init__(self, obj):
        self.obj = _word(obj)

    def show(self):
        return "ev[%s]" % ",".join(self.obj)


class Coeval(MorExpr):
    "Coevaluation n: I -> X (*) X*."

    def __init__(self, obj):
        self.obj = _word(obj)

    def show(self):
        return "coev[%s]" % ",".join(self.obj)


def seq(*items):
    return Compose(list(items))


def par(*items):
    return Tensor(list(items))


class Env:
    """Evaluation environment: named objects, named generator maps, and the
    ambient bicharacter."""

    def __init__(self, objects, generators, chi):
        self.objects = dict(objects)
        self.generators = dict(generators)
        self.chi = chi

    def space(self, word):
        try:
            spaces = [self.objects[n] for n in word]
        except KeyError as exc:
            raise UnknownName("unknown object %s" % exc)
        if not spaces:
            some = next(iter(self.objects.values()), None)
            field = some.field if some is not None else linalg.QQ
            return Space.unit(field, self.chi.group)
        return tensor_spaces(*spaces)

    def generator(self, name):
        if name not in self.generators:
            raise UnknownName("unknown generator %r" % name)
        return self.generators[name]


def infer_boundary(expr, env, path="top"):
    "Source and target spaces of a term; raises on ill-typed composites."
    if isinstance(expr, Gen):
        f = env.generator(expr.name)
        return f.src, f.tgt
    if isinstance(expr, Id):
        X = env.space(expr.obj)
        return X, X
    if isinstance(expr, Compose):
        src, cur = infer_boundary(expr.items[0], env, path + ".0")
        for k, item in enumerate(expr.items[1:], start=1):
            s, t = infer_boundary(item, env, "%s.%d" % (path, k))
            if s != cur:
                raise BoundaryMismatch("ill-typed composition at %s.%d" % (path, k))
            cur = t
        return src, cur
    if isinstance(expr, Tensor):
        parts = [infer_boundary(item, env, "%s.%d" % (path, k))
                 for k, item in enumerate(expr.items)]
        return (tensor_spaces(*[p[0] for p in parts]),
                tensor_spaces(*[p[1] for p in parts]))
    if isinstance(expr, (Braid, BraidInv)):
        X, Y = env.space(expr.a), env.space(expr.b)
        return X.tensor(Y), Y.tensor(X)
    if isinstance(expr, Eval):
        X = env.space(expr.obj)
        Xstar, e, _ = dual_space(X)
        return e.src, e.tgt
    if isinstance(expr, Coeval):
        X = env.space(expr.obj)
        _, _, n = dual_space(X)
        return n.src, n.tgt
    raise TypeError("not a MorExpr: %r" % (expr,))


def evaluate(expr, env):
    "Evaluate a term to the LinMap it denotes."
    if isinstance(expr, Gen):
        return env.generator(expr.name)
    if isinstance(expr, Id):
        return identity(env.space(expr.obj))
    if isinstance(expr, Compose):
        out = evaluate(expr.items[0], env)
        for k, item in enumerate(expr.items[1:], start=1):
            g = evaluate(item, env)
            if g.src != out.tgt:
                raise BoundaryMismatch("ill-typed composition at top.%d" % k)
            out = compose(g, out)
        return out
    if isinstance(expr, Tensor):
        out = evaluate(expr.items[0], env)
        for item in expr.items[1:]:
            out = tensor(out, evaluate(item, env))
        return out
    if isinstance(expr, Braid):
        return linalg.braiding(env.space(expr.a), env.space(expr.b), env.chi)
    if isinstance(expr, BraidInv):
        return linalg.braiding_inv(env.space(expr.a), env.space(expr.b), env.chi)
    if isinstance(expr, Eval):
        _, e, _ = dual_space(env.space(expr.obj))
        return e
    if isinstance(expr, Coeval):
        _, _, n = dual_space(env.space(expr.obj))
        return n
    raise TypeError("not a MorExpr: %r" % (expr,))


def exprs_equal(lhs, rhs, env):
    """True iff both terms evaluate to the same matrix.  Boundary
    disagreement is an error, not inequality."""
    ls, lt = infer_boundary(lhs, env)
    rs, rt = infer_boundary(rhs, env)
    if ls != rs or lt != rt:
        raise BoundaryMismatch("terms have different boundaries")
    return evaluate(lhs, env) == evaluate(rhs, env)
