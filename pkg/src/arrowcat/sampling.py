"""Seeded samplers for arrow objects and commuting squares."""

from __future__ import annotations

import random

from .arrow import ArrowMorphism, ArrowObject
from .exactmat import generators as gen
from .exactmat.categories import MAT_Q, ConcreteCategory
from .exactmat.matrix import RatMatrix, compose, invert, is_invertible, transpose


class Sampler:
    """Draws admitted arrow objects and squares from one category.

    Squares are built three ways, picked at random:

    * over an invertible source ``f``: free ``top`` and target, then
      ``bottom = f' . top . f^-1``;
    * over any ``f``: ``top = T . L . f`` and ``bottom = f' . T . L``, which
      respects the kernel of ``f``;
    * invertible ``top``, free ``bottom``, then ``f' = bottom . f . top^-1``.
    """

    def __init__(self, category: ConcreteCategory = MAT_Q, seed: int | random.Random = 0, max_dim: int = 3):
        self.category = category
        self.rng = seed if isinstance(seed, random.Random) else random.Random(seed)
        self.max_dim = max_dim

    def dim(self) -> int:
        return gen.random_dim(self.rng, self.max_dim)

    def morphism(self, src: int, dst: int) -> RatMatrix:
        return gen.random_morphism(self.rng, self.category, src, dst)

    def invertible(self, n: int) -> RatMatrix:
        tag = self.category.tag
        if tag == "MatQUnitary":
            return self.morphism(n, n)
        if tag == "MatN":
            return gen.random_permutation(self.rng, n)
        return gen.random_invertible(self.rng, n)

    def arrow_object(self, src: int | None = None, dst: int | None = None, invertible: bool = False) -> ArrowObject:
        src = src if src is not None else self.dim()
        if self.category.endo_only or invertible:
            dst = src
        elif dst is None:
            dst = self.dim()
        m = self.invertible(src) if invertible else self.morphism(src, dst)
        return ArrowObject.of(m, self.category)

    def square(self, source: ArrowObject | None = None, target: ArrowObject | None = None) -> ArrowMorphism:
        """A random square out of ``source``; into ``target`` when given (needs an invertible source)."""
        f = source if source is not None else self.arrow_object()
        cat = self.category
        rng = self.rng
        if cat.endo_only:
            fp = target if target is not None else self.arrow_object(f.src)
            top = self.morphism(f.src, fp.src)
            f_inv = transpose(f.map) if cat.tag == "MatQUnitary" else invert(f.map)
            bottom = compose(compose(fp.map, top), f_inv)
            return ArrowMorphism(f, fp, top, bottom)
        invertible_f = f.src == f.dst and is_invertible(f.map)
        if target is not None:
            if not invertible_f:
                raise ValueError("a square into a fixed target needs an invertible source")
            top = self.morphism(f.src, target.src)
            return ArrowMorphism(f, target, top, compose(compose(target.map, top), invert(f.map)))
        a2, b2 = self.dim(), self.dim()
        route = rng.random()
        if cat.tag == "MatQ" and invertible_f and route < 0.35:
            top = self.morphism(f.src, a2)
            fp = self.morphism(a2, b2)
            bottom = compose(compose(fp, top), invert(f.map))
        elif cat.tag == "MatQ" and route < 0.6:
            top = self.invertible(f.src)
            a2 = f.src
            bottom = self.morphism(f.dst, b2)
            fp = compose(compose(bottom, f.map), invert(top))
        else:
            T = self.morphism(f.src, a2)
            L = self.morphism(f.dst, f.src)
            top = compose(compose(T, L), f.map)
            fp = self.morphism(a2, b2)
            bottom = compose(compose(fp, T), L)
        return ArrowMorphism(f, ArrowObject.of(fp, cat), top, bottom)

    def iso_square(self, source: ArrowObject | None = None) -> ArrowMorphism:
        """A square with invertible components."""
        f = source if source is not None else self.arrow_object()
        top = self.invertible(f.src)
        bottom = self.invertible(f.dst)
        fp = compose(compose(bottom, f.map), invert(top))
        return ArrowMorphism(f, ArrowObject.of(fp), top, bottom)

    def composable(self, length: int = 2) -> list[ArrowMorphism]:
        """``length`` squares, each starting where the previous one ends."""
        chain = [self.square()]
        for _ in range(length - 1):
            chain.append(self.square(chain[-1].target))
        return chain

    def ambient_pair(self) -> tuple[RatMatrix, RatMatrix]:
        """A composable pair ``(g, f)`` of ambient morphisms."""
        a = self.dim()
        b = a if self.category.endo_only else self.dim()
        c = a if self.category.endo_only else self.dim()
        return self.morphism(b, c), self.morphism(a, b)
