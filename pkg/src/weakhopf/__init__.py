"""Exact-arithmetic toolkit for weak bimonoids, weak Hopf monoids and
quantum groupoids realized in graded finite-dimensional vector spaces.

Everything is computed over exact fields (arbitrary-precision rationals
or a prime field), so equality of morphisms is decided on the nose and
never within a tolerance.
"""

from weakhopf.linalg import (
    QQ,
    GF,
    Bicharacter,
    Space,
    LinMap,
    compose,
    tensor,
    braiding,
    braiding_inv,
    dual_space,
    split_idempotent,
    equalizer,
    DomainMismatch,
    GradeOutsideGroup,
    NotIdempotent,
)

__all__ = [
    "QQ",
    "GF",
    "Bicharacter",
    "Space",
    "LinMap",
    "compose",
    "tensor",
    "braiding",
    "braiding_inv",
    "dual_space",
    "split_idempotent",
    "equalizer",
    "DomainMismatch",
    "GradeOutsideGroup",
    "NotIdempotent",
]
