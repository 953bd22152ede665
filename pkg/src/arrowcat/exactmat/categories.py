"""Concrete matrix categories on which the laws are checked.

Objects are positive dimensions, morphisms ``v -> b`` are ``b x v``
matrices admitted by a predicate. Every instance is strict monoidal under
the Kronecker product, but the associator, unitors, braiding, duals, pivot
and twist are still handed out as explicit matrices by supplier functions
so that the checkers exercise every edge of every diagram. Replacing a
supplier with :func:`dataclasses.replace` is how negative controls corrupt
a structure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .matrix import (
    RatMatrix,
    commutation_matrix,
    identity,
    is_invertible,
    kronecker,
)


def _assoc(a: int, b: int, c: int) -> RatMatrix:
    return identity(a * b * c)


def _unitor(a: int) -> RatMatrix:
    return identity(a)


def cup(n: int) -> RatMatrix:
    """Evaluation ``d_n: n* (x) n -> 1``: row vector with 1 at ``i*n + i``."""
    row = [0] * (n * n)
    for i in range(n):
        row[i * n + i] = 1
    return RatMatrix._raw(1, n * n, row)


def cap(n: int) -> RatMatrix:
    """Coevaluation ``b_n: 1 -> n (x) n*``: the transpose of :func:`cup`."""
    col = [0] * (n * n)
    for i in range(n):
        col[i * n + i] = 1
    return RatMatrix._raw(n * n, 1, col)


def _self_dual(n: int) -> int:
    return n


@dataclass(frozen=True)
class ConcreteCategory:
    tag: str
    admits: Callable[[RatMatrix], bool]
    # MatQCore / MatQUnitary only have morphisms between equal dimensions
    endo_only: bool = False
    unit: int = 1
    associator: Callable[[int, int, int], RatMatrix] = _assoc
    left_unitor: Callable[[int], RatMatrix] = _unitor
    right_unitor: Callable[[int], RatMatrix] = _unitor
    braiding: Callable[[int, int], RatMatrix] | None = commutation_matrix
    dual_object: Callable[[int], int] | None = _self_dual
    evaluation: Callable[[int], RatMatrix] | None = cup
    coevaluation: Callable[[int], RatMatrix] | None = cap
    pivot: Callable[[int], RatMatrix] | None = _unitor
    twist: Callable[[int], RatMatrix] | None = _unitor
    description: str = field(default="", compare=False)

    def is_object(self, n: int) -> bool:
        return isinstance(n, int) and n >= 1

    def tensor(self, a: int, b: int) -> int:
        return a * b

    def tensor_morphisms(self, m: RatMatrix, n: RatMatrix) -> RatMatrix:
        return kronecker(m, n)

    def identity(self, n: int) -> RatMatrix:
        return identity(n)

    def is_morphism(self, m: RatMatrix) -> bool:
        if self.endo_only and not m.is_square():
            return False
        return self.admits(m)

    @property
    def braided(self) -> bool:
        return self.braiding is not None

    @property
    def rigid(self) -> bool:
        return self.evaluation is not None and self.coevaluation is not None

    def __repr__(self) -> str:
        return f"ConcreteCategory({self.tag})"


def _any(m: RatMatrix) -> bool:
    return True


def _natural(m: RatMatrix) -> bool:
    return m.is_natural()


def _invertible(m: RatMatrix) -> bool:
    return is_invertible(m)


def _orthogonal(m: RatMatrix) -> bool:
    return m.is_orthogonal()


MAT_N = ConcreteCategory("MatN", _natural, description="matrices with non-negative integer entries")
MAT_Q = ConcreteCategory("MatQ", _any, description="all rational matrices")
MAT_Q_CORE = ConcreteCategory("MatQCore", _invertible, endo_only=True,
                              description="invertible rational matrices (the core of MatQ)")
MAT_Q_UNITARY = ConcreteCategory("MatQUnitary", _orthogonal, endo_only=True,
                                 description="rational matrices with M^T = M^-1")

CATEGORIES = {c.tag: c for c in (MAT_N, MAT_Q, MAT_Q_CORE, MAT_Q_UNITARY)}


def group_algebra_category(group) -> ConcreteCategory:
    """MatQ tagged with a distinguished group algebra ``Q[G]``."""
    return ConcreteCategory(f"GroupAlg({group.name})", _any,
                            description=f"MatQ hosting the group algebra of {group.name}")
