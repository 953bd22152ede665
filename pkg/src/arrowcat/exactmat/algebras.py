"""Structure maps of algebra objects in the matrix categories."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .groups import GroupPresentation
from .matrix import RatMatrix, permutation_matrix, transpose

FLAGS = frozenset({
    "monoid", "comonoid", "bialgebra", "frobenius", "special", "dagger",
    "hopf", "commutative", "cocommutative",
})


@dataclass(frozen=True)
class AlgebraData:
    """Maps on a carrier of dimension ``n``.

    ``mult`` is ``n x n^2``, ``unit`` is ``n x 1``, ``comult`` is ``n^2 x n``,
    ``counit`` is ``1 x n`` and ``antipode`` is ``n x n``. Any of them may be
    ``None``; ``flags`` records which axiom suites the data claims to pass.
    """

    carrier: int
    mult: RatMatrix | None = None
    unit: RatMatrix | None = None
    comult: RatMatrix | None = None
    counit: RatMatrix | None = None
    antipode: RatMatrix | None = None
    flags: frozenset = field(default_factory=frozenset)
    name: str = ""

    def __post_init__(self):
        n = self.carrier
        shapes = {
            "mult": (n, n * n), "unit": (n, 1), "comult": (n * n, n),
            "counit": (1, n), "antipode": (n, n),
        }
        for attr, shape in shapes.items():
            m = getattr(self, attr)
            if m is not None and m.shape != shape:
                raise ValueError(f"{attr} of a dimension-{n} algebra must be {shape}, got {m.shape}")
        unknown = set(self.flags) - FLAGS
        if unknown:
            raise ValueError(f"unknown flags {sorted(unknown)}")
        object.__setattr__(self, "flags", frozenset(self.flags))

    def has(self, flag: str) -> bool:
        return flag in self.flags

    def with_maps(self, **maps) -> AlgebraData:
        return replace(self, **maps)


def group_algebra(group: GroupPresentation) -> AlgebraData:
    """``Q[G]``: ``mu(g (x) h) = gh``, ``eta = e``, ``Delta(g) = g (x) g``,
    ``epsilon(g) = 1``, ``S(g) = g^-1``."""
    n = group.order
    mu = [0] * (n * n * n)
    for g in range(n):
        for h in range(n):
            mu[group.mult[g][h] * (n * n) + (g * n + h)] = 1
    unit = [0] * n
    unit[group.identity] = 1
    delta = [0] * (n * n * n)
    for g in range(n):
        delta[(g * n + g) * n + g] = 1
    flags = {"monoid", "comonoid", "bialgebra", "hopf", "cocommutative"}
    if group.is_abelian:
        flags.add("commutative")
    return AlgebraData(
        carrier=n,
        mult=RatMatrix._raw(n, n * n, mu),
        unit=RatMatrix._raw(n, 1, unit),
        comult=RatMatrix._raw(n * n, n, delta),
        counit=RatMatrix._raw(1, n, [1] * n),
        antipode=permutation_matrix(list(group.inverse)),
        flags=frozenset(flags),
        name=f"Q[{group.name}]",
    )


def basis_copying_algebra(n: int) -> AlgebraData:
    """``mu(e_i (x) e_j) = delta_ij e_i``, ``Delta(e_i) = e_i (x) e_i``.

    A commutative special dagger Frobenius algebra (``Delta = mu^T``,
    ``epsilon = eta^T``).
    """
    mu = [0] * (n * n * n)
    for i in range(n):
        mu[i * (n * n) + (i * n + i)] = 1
    mult = RatMatrix._raw(n, n * n, mu)
    return AlgebraData(
        carrier=n,
        mult=mult,
        unit=RatMatrix._raw(n, 1, [1] * n),
        comult=transpose(mult),
        counit=RatMatrix._raw(1, n, [1] * n),
        flags=frozenset({"monoid", "comonoid", "frobenius", "special", "dagger",
                         "commutative", "cocommutative"}),
        name=f"Copy({n})",
    )
