"""Deterministic seeded generators for matrices, group homs and algebras.

Every generator takes a :class:`random.Random`; :func:`random_instance`
wraps them behind a single seeded entry point.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ..errors import GenerationFailed
from .algebras import AlgebraData, basis_copying_algebra, group_algebra
from .categories import ConcreteCategory
from .groups import GroupHom, GroupPresentation, homomorphisms, standard_groups
from .matrix import RatMatrix, compose, identity, permutation_matrix

PYTHAGOREAN = ((3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29))


def random_dim(rng: random.Random, max_dim: int) -> int:
    return rng.randint(1, max_dim)


def random_integer_matrix(rng, rows, cols, lo=-3, hi=3) -> RatMatrix:
    return RatMatrix._raw(rows, cols, [rng.randint(lo, hi) for _ in range(rows * cols)])


def random_natural_matrix(rng, rows, cols, hi=3) -> RatMatrix:
    return random_integer_matrix(rng, rows, cols, 0, hi)


def random_rational_matrix(rng, rows, cols) -> RatMatrix:
    entries = [Fraction(rng.randint(-3, 3), rng.choice((1, 1, 1, 2, 3))) for _ in range(rows * cols)]
    return RatMatrix(rows, cols, entries)


def random_permutation(rng, n) -> RatMatrix:
    perm = list(range(n))
    rng.shuffle(perm)
    return permutation_matrix(perm)


def random_invertible(rng, n, steps=None) -> RatMatrix:
    """Product of elementary matrices: row additions, swaps and scalings."""
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(steps if steps is not None else 2 * n + 1):
        kind = rng.random()
        i = rng.randrange(n)
        if n > 1 and kind < 0.6:
            j = rng.choice([k for k in range(n) if k != i])
            c = rng.choice((-2, -1, 1, 2, Fraction(1, 2)))
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
        elif n > 1 and kind < 0.8:
            j = rng.randrange(n)
            rows[i], rows[j] = rows[j], rows[i]
        else:
            c = rng.choice((-1, 2, Fraction(1, 2), 3))
            rows[i] = [c * a for a in rows[i]]
    return RatMatrix.from_rows(rows)


def random_orthogonal(rng, n) -> RatMatrix:
    """Signed permutation times Givens rotations by Pythagorean angles."""
    perm = random_permutation(rng, n)
    signs = [rng.choice((1, -1)) for _ in range(n)]
    m = compose(RatMatrix._raw(n, n, [signs[i] if i == j else 0 for i in range(n) for j in range(n)]), perm)
    if n < 2:
        return m
    for _ in range(rng.randint(1, n)):
        i, j = rng.sample(range(n), 2)
        a, b, c = rng.choice(PYTHAGOREAN)
        cos, sin = Fraction(a, c), Fraction(b, c)
        g = identity(n).tolist()
        g[i][i], g[i][j], g[j][i], g[j][j] = cos, -sin, sin, cos
        m = compose(RatMatrix.from_rows(g), m)
    return m


def random_morphism(rng, category: ConcreteCategory, src: int, dst: int) -> RatMatrix:
    """A random morphism ``src -> dst`` admitted by ``category``."""
    tag = category.tag
    if tag == "MatN":
        return random_natural_matrix(rng, dst, src)
    if tag == "MatQCore":
        if src != dst:
            raise GenerationFailed("the core only has endomorphism dimensions")
        return random_invertible(rng, src)
    if tag == "MatQUnitary":
        if src != dst:
            raise GenerationFailed("unitary morphisms need equal dimensions")
        return random_orthogonal(rng, src) if rng.random() < 0.5 else random_permutation(rng, src)
    if rng.random() < 0.25:
        return random_rational_matrix(rng, dst, src)
    return random_integer_matrix(rng, dst, src)


def random_hom(rng, source: GroupPresentation, target: GroupPresentation, nontrivial=True) -> GroupHom:
    homs = [h for h in homomorphisms(source, target) if not (nontrivial and h.is_trivial)]
    if not homs:
        raise GenerationFailed(f"no {'nontrivial ' if nontrivial else ''}homomorphism {source.name} -> {target.name}")
    return rng.choice(homs)


KINDS = ("integer", "natural", "rational", "invertible", "permutation", "orthogonal",
         "group_hom", "group_algebra", "copy_algebra")


def random_instance(kind: str, size: int, seed: int, *, rows: int | None = None,
                    source: GroupPresentation | None = None,
                    target: GroupPresentation | None = None):
    """Seeded instance of the requested kind; the same seed gives the same instance.

    ``size`` bounds the dimension (matrices are ``size x size`` unless ``rows``
    is given) or the group order. Raises GenerationFailed when nothing exists.
    """
    if size < 1:
        raise ValueError("size must be at least 1")
    rng = random.Random(seed)
    r = rows if rows is not None else size
    if kind == "integer":
        return random_integer_matrix(rng, r, size)
    if kind == "natural":
        return random_natural_matrix(rng, r, size)
    if kind == "rational":
        return random_rational_matrix(rng, r, size)
    if kind == "invertible":
        return random_invertible(rng, size)
    if kind == "permutation":
        return random_permutation(rng, size)
    if kind == "orthogonal":
        return random_orthogonal(rng, size)
    groups = [g for g in standard_groups().values() if g.order <= size]
    if kind == "group_hom":
        if source is not None and target is not None:
            return random_hom(rng, source, target)
        pairs = [(g, h) for g in groups for h in groups
                 if any(not x.is_trivial for x in homomorphisms(g, h))]
        if not pairs:
            raise GenerationFailed(f"no nontrivial homomorphism between groups of order <= {size}")
        g, h = rng.choice(pairs)
        return random_hom(rng, g, h)
    if kind == "group_algebra":
        if not groups:
            raise GenerationFailed("no group within the size bound")
        return group_algebra(rng.choice(groups))
    if kind == "copy_algebra":
        return basis_copying_algebra(rng.randint(1, size))
    raise ValueError(f"unknown generator kind {kind!r}; expected one of {KINDS}")


__all__ = [
    "AlgebraData", "KINDS", "random_dim", "random_hom", "random_instance", "random_integer_matrix",
    "random_invertible", "random_morphism", "random_natural_matrix", "random_orthogonal",
    "random_permutation", "random_rational_matrix",
]
