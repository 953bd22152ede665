"""Finite groups by multiplication table, and homomorphism search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from ..errors import InvalidGroup
from .matrix import RatMatrix


@dataclass(frozen=True)
class GroupPresentation:
    order: int
    mult: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    identity: int
    name: str = "G"

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise InvalidGroup("order must be positive")
        if len(self.mult) != n or any(len(r) != n for r in self.mult):
            raise InvalidGroup(f"{self.name}: multiplication table is not {n}x{n}")
        full = set(range(n))
        for r in self.mult:
            if set(r) != full:
                raise InvalidGroup(f"{self.name}: table row is not a permutation (not a Latin square)")
        for j in range(n):
            if {self.mult[i][j] for i in range(n)} != full:
                raise InvalidGroup(f"{self.name}: table column is not a permutation (not a Latin square)")
        e = self.identity
        if not 0 <= e < n or any(self.mult[e][g] != g or self.mult[g][e] != g for g in range(n)):
            raise InvalidGroup(f"{self.name}: {e} is not a two-sided identity")
        if len(self.inverse) != n:
            raise InvalidGroup(f"{self.name}: inverse table has wrong length")
        for g in range(n):
            h = self.inverse[g]
            if not 0 <= h < n or self.mult[g][h] != e or self.mult[h][g] != e:
                raise InvalidGroup(f"{self.name}: inverse of {g} is wrong")
        m = self.mult
        for a, b, c in product(range(n), repeat=3):
            if m[m[a][b]][c] != m[a][m[b][c]]:
                raise InvalidGroup(f"{self.name}: not associative at ({a}, {b}, {c})")

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]], name: str = "G") -> GroupPresentation:
        """Build from a table alone, deriving identity and inverses."""
        n = len(table)
        mult = tuple(tuple(int(x) for x in row) for row in table)
        try:
            e = next(g for g in range(n) if all(mult[g][h] == h and mult[h][g] == h for h in range(n)))
        except StopIteration:
            raise InvalidGroup(f"{name}: no identity element") from None
        inv = []
        for g in range(n):
            hs = [h for h in range(n) if mult[g][h] == e]
            if len(hs) != 1:
                raise InvalidGroup(f"{name}: element {g} has no unique inverse")
            inv.append(hs[0])
        return cls(n, mult, tuple(inv), e, name)

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    @property
    def is_abelian(self) -> bool:
        return all(self.mult[a][b] == self.mult[b][a] for a in range(self.order) for b in range(self.order))

    def generators(self) -> list[int]:
        """A small generating set, chosen greedily."""
        gens: list[int] = []
        reached = {self.identity}
        for g in range(self.order):
            if g in reached:
                continue
            gens.append(g)
            reached = self._closure(gens)
            if len(reached) == self.order:
                break
        return gens

    def _closure(self, gens: Sequence[int]) -> set[int]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.mult[x][s]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen


def cyclic(n: int) -> GroupPresentation:
    return GroupPresentation(n, tuple(tuple((a + b) % n for b in range(n)) for a in range(n)),
                             tuple((-a) % n for a in range(n)), 0, f"Z{n}")


def direct_product(g: GroupPresentation, h: GroupPresentation) -> GroupPresentation:
    n = g.order * h.order

    def idx(a, b):
        return a * h.order + b

    table = [[0] * n for _ in range(n)]
    for a1, b1, a2, b2 in product(range(g.order), range(h.order), range(g.order), range(h.order)):
        table[idx(a1, b1)][idx(a2, b2)] = idx(g.mult[a1][a2], h.mult[b1][b2])
    return GroupPresentation.from_table(table, f"{g.name}x{h.name}")


def symmetric(n: int) -> GroupPresentation:
    """The symmetric group on ``n`` letters, elements in lexicographic order."""
    from itertools import permutations
    elems = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(elems)}
    # (p * q)(x) = p(q(x))
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in elems] for p in elems]
    return GroupPresentation.from_table(table, f"S{n}")


def standard_groups() -> dict[str, GroupPresentation]:
    """Every group of order at most 6, up to isomorphism."""
    z2 = cyclic(2)
    return {
        "Z2": z2,
        "Z3": cyclic(3),
        "Z4": cyclic(4),
        "Z2xZ2": direct_product(z2, z2),
        "Z5": cyclic(5),
        "S3": symmetric(3),
        "Z6": cyclic(6),
    }


@dataclass(frozen=True)
class GroupHom:
    source: GroupPresentation
    target: GroupPresentation
    images: tuple[int, ...]

    def __post_init__(self):
        g, h = self.source, self.target
        if len(self.images) != g.order:
            raise InvalidGroup("homomorphism needs one image per element")
        for a in range(g.order):
            for b in range(g.order):
                if self.images[g.mult[a][b]] != h.mult[self.images[a]][self.images[b]]:
                    raise InvalidGroup(f"not a homomorphism at ({a}, {b})")

    @property
    def is_trivial(self) -> bool:
        return all(x == self.target.identity for x in self.images)

    def matrix(self) -> RatMatrix:
        """The induced linear map ``Q[G] -> Q[H]``, ``e_g -> e_phi(g)``."""
        m, n = self.target.order, self.source.order
        nums = [0] * (m * n)
        for g, x in enumerate(self.images):
            nums[x * n + g] = 1
        return RatMatrix._raw(m, n, nums)


def homomorphisms(g: GroupPresentation, h: GroupPresentation) -> list[GroupHom]:
    """All homomorphisms ``g -> h``, by assigning images to generators and
    propagating through the Cayley graph."""
    gens = g.generators()
    found = []
    for imgs in product(range(h.order), repeat=len(gens)):
        phi = {g.identity: h.identity}
        frontier = [g.identity]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for s, t in zip(gens, imgs):
                    y = g.mult[x][s]
                    val = h.mult[phi[x]][t]
                    if y in phi:
                        if phi[y] != val:
                            ok = False
                            break
                    else:
                        phi[y] = val
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if not ok or len(phi) != g.order:
            continue
        images = tuple(phi[x] for x in range(g.order))
        try:
            found.append(GroupHom(g, h, images))
        except InvalidGroup:
            continue
    return found
