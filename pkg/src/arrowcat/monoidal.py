"""Pointwise monoidal structure, braiding and monoidal functors on arrow categories.

Every structure morphism is assembled from the ambient category's suppliers
with the componentwise formulas (e.g. the associator at ``(f, g, h)`` is
``(alpha_{A1,A2,A3}, alpha_{B1,B2,B3})``) and then validated as a square.
The coherence checkers build their diagrams on those morphisms and compare
composite paths with :func:`check_diagram`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .arrow import (
    ArrowMorphism,
    ArrowObject,
    FunctorData,
    LiftedFunctor,
    NatTransData,
    arrow_id,
    arrow_inverse,
    conjugation_functor,
    identity_functor,
    naturality_verdict,
)
from .diagram import Diagram, Verdict, all_of, check_diagram
from .errors import ArrowcatError, NotMonoidal, NotMonoidalNatTrans
from .exactmat.algebras import basis_copying_algebra
from .exactmat.categories import MAT_Q, ConcreteCategory
from .exactmat.matrix import RatMatrix, commutation_matrix, compose, identity, invert, kron_all, kronecker


class MonoidalStructure:
    """The monoidal (and, if available, braided) structure on ``Arr(C)``."""

    def __init__(self, category: ConcreteCategory = MAT_Q):
        self.category = category

    @property
    def unit_arrow(self) -> ArrowObject:
        u = self.category.unit
        return ArrowObject(u, u, identity(u))

    def tensor(self, f: ArrowObject, g: ArrowObject) -> ArrowObject:
        c = self.category
        return ArrowObject(c.tensor(f.src, g.src), c.tensor(f.dst, g.dst), c.tensor_morphisms(f.map, g.map))

    def tensor_morphisms(self, phi: ArrowMorphism, psi: ArrowMorphism) -> ArrowMorphism:
        c = self.category
        return ArrowMorphism(self.tensor(phi.source, psi.source), self.tensor(phi.target, psi.target),
                             c.tensor_morphisms(phi.top, psi.top), c.tensor_morphisms(phi.bottom, psi.bottom))

    def associator(self, f: ArrowObject, g: ArrowObject, h: ArrowObject) -> ArrowMorphism:
        a = self.category.associator
        return ArrowMorphism(self.tensor(self.tensor(f, g), h), self.tensor(f, self.tensor(g, h)),
                             a(f.src, g.src, h.src), a(f.dst, g.dst, h.dst))

    def associator_inverse(self, f, g, h) -> ArrowMorphism:
        return arrow_inverse(self.associator(f, g, h))

    def left_unitor(self, f: ArrowObject) -> ArrowMorphism:
        lam = self.category.left_unitor
        return ArrowMorphism(self.tensor(self.unit_arrow, f), f, lam(f.src), lam(f.dst))

    def right_unitor(self, f: ArrowObject) -> ArrowMorphism:
        rho = self.category.right_unitor
        return ArrowMorphism(self.tensor(f, self.unit_arrow), f, rho(f.src), rho(f.dst))

    def braiding(self, f: ArrowObject, g: ArrowObject) -> ArrowMorphism:
        sigma = self.category.braiding
        if sigma is None:
            raise NotMonoidal(f"{self.category.tag} has no braiding")
        return ArrowMorphism(self.tensor(f, g), self.tensor(g, f), sigma(f.src, g.src), sigma(f.dst, g.dst))

    def identity(self, f: ArrowObject) -> ArrowMorphism:
        return arrow_id(f)

    @property
    def unit_object(self) -> ArrowObject:
        return self.unit_arrow

    def inverse(self, phi: ArrowMorphism) -> ArrowMorphism:
        return arrow_inverse(phi)


class AmbientStructure:
    """The same interface as :class:`MonoidalStructure`, on the ambient category itself.

    Lets one diagram builder serve both levels: objects are dimensions and
    morphisms are matrices.
    """

    def __init__(self, category: ConcreteCategory = MAT_Q):
        self.category = category

    @property
    def unit_object(self) -> int:
        return self.category.unit

    def tensor(self, a: int, b: int) -> int:
        return self.category.tensor(a, b)

    def tensor_morphisms(self, m: RatMatrix, n: RatMatrix) -> RatMatrix:
        return self.category.tensor_morphisms(m, n)

    def associator(self, a, b, c) -> RatMatrix:
        return self.category.associator(a, b, c)

    def associator_inverse(self, a, b, c) -> RatMatrix:
        return invert(self.category.associator(a, b, c))

    def left_unitor(self, a) -> RatMatrix:
        return self.category.left_unitor(a)

    def right_unitor(self, a) -> RatMatrix:
        return self.category.right_unitor(a)

    def braiding(self, a, b) -> RatMatrix:
        if self.category.braiding is None:
            raise NotMonoidal(f"{self.category.tag} has no braiding")
        return self.category.braiding(a, b)

    def identity(self, a: int) -> RatMatrix:
        return identity(a)

    def inverse(self, m: RatMatrix) -> RatMatrix:
        return invert(m)


DEFAULT = MonoidalStructure(MAT_Q)


def tensor_arrow_objects(f: ArrowObject, g: ArrowObject, structure: MonoidalStructure = DEFAULT) -> ArrowObject:
    return structure.tensor(f, g)


def tensor_arrow_morphisms(phi: ArrowMorphism, psi: ArrowMorphism,
                           structure: MonoidalStructure = DEFAULT) -> ArrowMorphism:
    return structure.tensor_morphisms(phi, psi)


def braiding_arrow(f: ArrowObject, g: ArrowObject, structure: MonoidalStructure = DEFAULT) -> ArrowMorphism:
    return structure.braiding(f, g)


# -- coherence ---------------------------------------------------------------

def check_pentagon(structure: MonoidalStructure, f1, f2, f3, f4) -> Verdict:
    S = structure
    t = S.tensor
    d = Diagram("pentagon")
    d.vertex("((12)3)4", t(t(t(f1, f2), f3), f4))
    d.vertex("(12)(34)", t(t(f1, f2), t(f3, f4)))
    d.vertex("1(2(34))", t(f1, t(f2, t(f3, f4))))
    d.vertex("(1(23))4", t(t(f1, t(f2, f3)), f4))
    d.vertex("1((23)4)", t(f1, t(t(f2, f3), f4)))
    d.edge("a_{12,3,4}", "((12)3)4", "(12)(34)", lambda: S.associator(t(f1, f2), f3, f4))
    d.edge("a_{1,2,34}", "(12)(34)", "1(2(34))", lambda: S.associator(f1, f2, t(f3, f4)))
    d.edge("a_{1,2,3}(x)id", "((12)3)4", "(1(23))4",
           lambda: S.tensor_morphisms(S.associator(f1, f2, f3), arrow_id(f4)))
    d.edge("a_{1,23,4}", "(1(23))4", "1((23)4)", lambda: S.associator(f1, t(f2, f3), f4))
    d.edge("id(x)a_{2,3,4}", "1((23)4)", "1(2(34))",
           lambda: S.tensor_morphisms(arrow_id(f1), S.associator(f2, f3, f4)))
    d.path("a_{12,3,4}", "a_{1,2,34}")
    d.path("a_{1,2,3}(x)id", "a_{1,23,4}", "id(x)a_{2,3,4}")
    return check_diagram(d)


def check_triangle(structure: MonoidalStructure, f, f2) -> Verdict:
    S = structure
    t, u = S.tensor, S.unit_arrow
    d = Diagram("triangle")
    d.vertex("(fI)f'", t(t(f, u), f2))
    d.vertex("f(If')", t(f, t(u, f2)))
    d.vertex("ff'", t(f, f2))
    d.edge("a_{f,I,f'}", "(fI)f'", "f(If')", lambda: S.associator(f, u, f2))
    d.edge("id(x)l", "f(If')", "ff'", lambda: S.tensor_morphisms(arrow_id(f), S.left_unitor(f2)))
    d.edge("r(x)id", "(fI)f'", "ff'", lambda: S.tensor_morphisms(S.right_unitor(f), arrow_id(f2)))
    d.path("a_{f,I,f'}", "id(x)l")
    d.path("r(x)id")
    return check_diagram(d)


def check_hexagon_first(structure: MonoidalStructure, f, g, h) -> Verdict:
    S = structure
    t = S.tensor
    d = Diagram("hexagon (associator)")
    d.vertex("(fg)h", t(t(f, g), h))
    d.vertex("f(gh)", t(f, t(g, h)))
    d.vertex("(gh)f", t(t(g, h), f))
    d.vertex("g(hf)", t(g, t(h, f)))
    d.vertex("(gf)h", t(t(g, f), h))
    d.vertex("g(fh)", t(g, t(f, h)))
    d.edge("a_{f,g,h}", "(fg)h", "f(gh)", lambda: S.associator(f, g, h))
    d.edge("s_{f,gh}", "f(gh)", "(gh)f", lambda: S.braiding(f, t(g, h)))
    d.edge("a_{g,h,f}", "(gh)f", "g(hf)", lambda: S.associator(g, h, f))
    d.edge("s_{f,g}(x)id", "(fg)h", "(gf)h", lambda: S.tensor_morphisms(S.braiding(f, g), arrow_id(h)))
    d.edge("a_{g,f,h}", "(gf)h", "g(fh)", lambda: S.associator(g, f, h))
    d.edge("id(x)s_{f,h}", "g(fh)", "g(hf)", lambda: S.tensor_morphisms(arrow_id(g), S.braiding(f, h)))
    d.path("a_{f,g,h}", "s_{f,gh}", "a_{g,h,f}")
    d.path("s_{f,g}(x)id", "a_{g,f,h}", "id(x)s_{f,h}")
    return check_diagram(d)


def check_hexagon_second(structure: MonoidalStructure, f, g, h) -> Verdict:
    """The mirror hexagon, written with the inverse associator."""
    S = structure
    t = S.tensor
    d = Diagram("hexagon (inverse associator)")
    d.vertex("f(gh)", t(f, t(g, h)))
    d.vertex("(fg)h", t(t(f, g), h))
    d.vertex("h(fg)", t(h, t(f, g)))
    d.vertex("(hf)g", t(t(h, f), g))
    d.vertex("f(hg)", t(f, t(h, g)))
    d.vertex("(fh)g", t(t(f, h), g))
    d.edge("a^-1_{f,g,h}", "f(gh)", "(fg)h", lambda: S.associator_inverse(f, g, h))
    d.edge("s_{fg,h}", "(fg)h", "h(fg)", lambda: S.braiding(t(f, g), h))
    d.edge("a^-1_{h,f,g}", "h(fg)", "(hf)g", lambda: S.associator_inverse(h, f, g))
    d.edge("id(x)s_{g,h}", "f(gh)", "f(hg)", lambda: S.tensor_morphisms(arrow_id(f), S.braiding(g, h)))
    d.edge("a^-1_{f,h,g}", "f(hg)", "(fh)g", lambda: S.associator_inverse(f, h, g))
    d.edge("s_{f,h}(x)id", "(fh)g", "(hf)g", lambda: S.tensor_morphisms(S.braiding(f, h), arrow_id(g)))
    d.path("a^-1_{f,g,h}", "s_{fg,h}", "a^-1_{h,f,g}")
    d.path("id(x)s_{g,h}", "a^-1_{f,h,g}", "s_{f,h}(x)id")
    return check_diagram(d)


def check_hexagons(structure: MonoidalStructure, f, g, h) -> Verdict:
    return all_of("hexagons", [check_hexagon_first(structure, f, g, h),
                               check_hexagon_second(structure, f, g, h)])


def check_symmetry(structure: MonoidalStructure, f, g) -> Verdict:
    S = structure
    d = Diagram("symmetry")
    fg = S.tensor(f, g)
    d.vertex("fg", fg)
    d.vertex("gf", S.tensor(g, f))
    d.edge("s_{f,g}", "fg", "gf", lambda: S.braiding(f, g))
    d.edge("s_{g,f}", "gf", "fg", lambda: S.braiding(g, f))
    d.edge("id", "fg", "fg", arrow_id(fg))
    d.path("s_{f,g}", "s_{g,f}")
    d.path("id")
    return check_diagram(d)


def check_braiding_naturality(structure: MonoidalStructure, phi: ArrowMorphism, psi: ArrowMorphism) -> Verdict:
    """``s_{f',g'} . (phi (x) psi) == (psi (x) phi) . s_{f,g}``."""
    S = structure
    d = Diagram("braiding naturality")
    d.vertex("fg", S.tensor(phi.source, psi.source))
    d.vertex("gf", S.tensor(psi.source, phi.source))
    d.vertex("f'g'", S.tensor(phi.target, psi.target))
    d.vertex("g'f'", S.tensor(psi.target, phi.target))
    d.edge("phi(x)psi", "fg", "f'g'", lambda: S.tensor_morphisms(phi, psi))
    d.edge("psi(x)phi", "gf", "g'f'", lambda: S.tensor_morphisms(psi, phi))
    d.edge("s_{f,g}", "fg", "gf", lambda: S.braiding(phi.source, psi.source))
    d.edge("s_{f',g'}", "f'g'", "g'f'", lambda: S.braiding(phi.target, psi.target))
    d.path("phi(x)psi", "s_{f',g'}")
    d.path("s_{f,g}", "psi(x)phi")
    return check_diagram(d)


def check_interchange(structure: MonoidalStructure, phi, phi2, psi, psi2) -> Verdict:
    """``(phi2 . phi) (x) (psi2 . psi) == (phi2 (x) psi2) . (phi (x) psi)``."""
    S = structure
    d = Diagram("interchange")
    d.vertex("fg", S.tensor(phi.source, psi.source))
    d.vertex("f'g'", S.tensor(phi.target, psi.target))
    d.vertex("f''g''", S.tensor(phi2.target, psi2.target))
    d.edge("(phi2.phi)(x)(psi2.psi)", "fg", "f''g''", lambda: S.tensor_morphisms(phi2 @ phi, psi2 @ psi))
    d.edge("phi(x)psi", "fg", "f'g'", lambda: S.tensor_morphisms(phi, psi))
    d.edge("phi2(x)psi2", "f'g'", "f''g''", lambda: S.tensor_morphisms(phi2, psi2))
    d.path("(phi2.phi)(x)(psi2.psi)")
    d.path("phi(x)psi", "phi2(x)psi2")
    return check_diagram(d)


# -- monoidal functors -------------------------------------------------------

@dataclass(frozen=True)
class MonoidalFunctorData:
    """A (lax) monoidal functor: ``F2_{A,B}: F(A) (x) F(B) -> F(A (x) B)``, ``F0: I -> F(I)``."""

    base: FunctorData
    F2: Callable[[int, int], RatMatrix]
    F0: RatMatrix
    name: str = "F"


def monoidal_functor_verdicts(Fm: MonoidalFunctorData, category: ConcreteCategory,
                              objects: Iterable[tuple[int, int, int]],
                              morphisms: Iterable[tuple[RatMatrix, RatMatrix]],
                              braided: bool = False) -> list[Verdict]:
    """Ambient axioms of ``(F, F2, F0)`` on sampled objects and morphism pairs."""
    F, F2, F0 = Fm.base, Fm.F2, Fm.F0
    C = category
    out = []
    u = C.unit
    for f, g in morphisms:
        A, B, Cc, D = f.cols, f.rows, g.cols, g.rows
        lhs = compose(F2(B, D), kronecker(F(f), F(g)))
        rhs = compose(F(kronecker(f, g)), F2(A, Cc))
        out.append(Verdict(f"{Fm.name}2 naturality", lhs == rhs, None if lhs == rhs else f"{Fm.name}2 square"))
    for a, b, c in objects:
        Fa, Fb, Fc = F.obj(a), F.obj(b), F.obj(c)
        lhs = compose(F(C.associator(a, b, c)),
                      compose(F2(a * b, c), kronecker(F2(a, b), identity(Fc))))
        rhs = compose(F2(a, b * c), compose(kronecker(identity(Fa), F2(b, c)), C.associator(Fa, Fb, Fc)))
        out.append(Verdict(f"{Fm.name} associativity", lhs == rhs, None if lhs == rhs else f"{Fm.name}2 hexagon"))
        right = compose(F(C.right_unitor(a)), compose(F2(a, u), kronecker(identity(Fa), F0)))
        ok = right == C.right_unitor(Fa)
        out.append(Verdict(f"{Fm.name} right unitality", ok, None if ok else f"{Fm.name}0"))
        left = compose(F(C.left_unitor(a)), compose(F2(u, a), kronecker(F0, identity(Fa))))
        ok = left == C.left_unitor(Fa)
        out.append(Verdict(f"{Fm.name} left unitality", ok, None if ok else f"{Fm.name}0"))
        if braided:
            lhs = compose(F2(b, a), C.braiding(Fa, Fb))
            rhs = compose(F(C.braiding(a, b)), F2(a, b))
            out.append(Verdict(f"{Fm.name} braiding", lhs == rhs, None if lhs == rhs else f"{Fm.name}2_(b,a)"))
    return out


@dataclass(frozen=True)
class LiftedMonoidalFunctor:
    base: MonoidalFunctorData
    structure: MonoidalStructure

    @property
    def functor(self) -> LiftedFunctor:
        return LiftedFunctor(self.base.base)

    def __call__(self, x):
        return self.functor(x)

    def F2(self, f: ArrowObject, g: ArrowObject) -> ArrowMorphism:
        S, F = self.structure, self.functor
        return ArrowMorphism(S.tensor(F(f), F(g)), F(S.tensor(f, g)),
                             self.base.F2(f.src, g.src), self.base.F2(f.dst, g.dst))

    @property
    def F0(self) -> ArrowMorphism:
        u = self.structure.unit_arrow
        return ArrowMorphism(u, self.functor(u), self.base.F0, self.base.F0)


def lift_monoidal_functor(Fm: MonoidalFunctorData, structure: MonoidalStructure = DEFAULT,
                          objects=(), morphisms=(), validate: bool = True) -> LiftedMonoidalFunctor:
    if validate:
        v = all_of(Fm.name, monoidal_functor_verdicts(Fm, structure.category, objects, morphisms))
        if not v:
            raise NotMonoidal(f"{Fm.name} is not monoidal: {v.detail}")
    return LiftedMonoidalFunctor(Fm, structure)


def check_monoidal_functor_associativity(L: LiftedMonoidalFunctor, f, g, h) -> Verdict:
    S, F = L.structure, L.functor
    t = S.tensor
    d = Diagram(f"{L.base.name}~ associativity cube")
    d.vertex("(FfFg)Fh", t(t(F(f), F(g)), F(h)))
    d.vertex("F(fg)Fh", t(F(t(f, g)), F(h)))
    d.vertex("F((fg)h)", F(t(t(f, g), h)))
    d.vertex("F(f(gh))", F(t(f, t(g, h))))
    d.vertex("Ff(FgFh)", t(F(f), t(F(g), F(h))))
    d.vertex("FfF(gh)", t(F(f), F(t(g, h))))
    d.edge("F2_{f,g}(x)id", "(FfFg)Fh", "F(fg)Fh", lambda: S.tensor_morphisms(L.F2(f, g), arrow_id(F(h))))
    d.edge("F2_{fg,h}", "F(fg)Fh", "F((fg)h)", lambda: L.F2(t(f, g), h))
    d.edge("F(a)", "F((fg)h)", "F(f(gh))", lambda: F(S.associator(f, g, h)))
    d.edge("a_F", "(FfFg)Fh", "Ff(FgFh)", lambda: S.associator(F(f), F(g), F(h)))
    d.edge("id(x)F2_{g,h}", "Ff(FgFh)", "FfF(gh)", lambda: S.tensor_morphisms(arrow_id(F(f)), L.F2(g, h)))
    d.edge("F2_{f,gh}", "FfF(gh)", "F(f(gh))", lambda: L.F2(f, t(g, h)))
    d.path("F2_{f,g}(x)id", "F2_{fg,h}", "F(a)")
    d.path("a_F", "id(x)F2_{g,h}", "F2_{f,gh}")
    return check_diagram(d)


def check_monoidal_functor_unitality(L: LiftedMonoidalFunctor, f) -> Verdict:
    S, F = L.structure, L.functor
    t, u = S.tensor, S.unit_arrow
    right = Diagram(f"{L.base.name}~ right unitality cube")
    right.vertex("FfI", t(F(f), u))
    right.vertex("FfFI", t(F(f), F(u)))
    right.vertex("F(fI)", F(t(f, u)))
    right.vertex("Ff", F(f))
    right.edge("id(x)F0", "FfI", "FfFI", lambda: S.tensor_morphisms(arrow_id(F(f)), L.F0))
    right.edge("F2_{f,I}", "FfFI", "F(fI)", lambda: L.F2(f, u))
    right.edge("F(r_f)", "F(fI)", "Ff", lambda: F(S.right_unitor(f)))
    right.edge("r_Ff", "FfI", "Ff", lambda: S.right_unitor(F(f)))
    right.path("id(x)F0", "F2_{f,I}", "F(r_f)")
    right.path("r_Ff")
    left = Diagram(f"{L.base.name}~ left unitality cube")
    left.vertex("IFf", t(u, F(f)))
    left.vertex("FIFf", t(F(u), F(f)))
    left.vertex("F(If)", F(t(u, f)))
    left.vertex("Ff", F(f))
    left.edge("F0(x)id", "IFf", "FIFf", lambda: S.tensor_morphisms(L.F0, arrow_id(F(f))))
    left.edge("F2_{I,f}", "FIFf", "F(If)", lambda: L.F2(u, f))
    left.edge("F(l_f)", "F(If)", "Ff", lambda: F(S.left_unitor(f)))
    left.edge("l_Ff", "IFf", "Ff", lambda: S.left_unitor(F(f)))
    left.path("F0(x)id", "F2_{I,f}", "F(l_f)")
    left.path("l_Ff")
    return all_of(f"{L.base.name}~ unitality", [_safe(right), _safe(left)])


def _safe(d: Diagram) -> Verdict:
    try:
        return check_diagram(d)
    except ArrowcatError as exc:
        return Verdict(d.name, False, None, None, f"{type(exc).__name__}: {exc}")


def check_braided_functor_lift(L: LiftedMonoidalFunctor, f, g) -> Verdict:
    """``F2_{g,f} . s_{Ff,Fg} == F(s_{f,g}) . F2_{f,g}``.

    The back-right edge is ``F2`` at the swapped pair ``(g, f)``; that is the
    only index order for which the square type-checks.
    """
    S, F = L.structure, L.functor
    t = S.tensor
    d = Diagram(f"{L.base.name}~ braiding cube")
    d.vertex("FfFg", t(F(f), F(g)))
    d.vertex("FgFf", t(F(g), F(f)))
    d.vertex("F(fg)", F(t(f, g)))
    d.vertex("F(gf)", F(t(g, f)))
    d.edge("s_{Ff,Fg}", "FfFg", "FgFf", lambda: S.braiding(F(f), F(g)))
    d.edge("F2_{g,f}", "FgFf", "F(gf)", lambda: L.F2(g, f))
    d.edge("F2_{f,g}", "FfFg", "F(fg)", lambda: L.F2(f, g))
    d.edge("F(s_{f,g})", "F(fg)", "F(gf)", lambda: F(S.braiding(f, g)))
    d.path("s_{Ff,Fg}", "F2_{g,f}")
    d.path("F2_{f,g}", "F(s_{f,g})")
    return check_diagram(d)


# -- monoidal natural transformations ----------------------------------------

def monoidal_nat_trans_verdicts(eta: NatTransData, F: MonoidalFunctorData, G: MonoidalFunctorData,
                                objects: Iterable[tuple[int, int]], morphisms: Iterable[RatMatrix],
                                unit: int = 1) -> list[Verdict]:
    out = [naturality_verdict(eta, f) for f in morphisms]
    for a, c in objects:
        lhs = compose(eta(a * c), F.F2(a, c))
        rhs = compose(G.F2(a, c), kronecker(eta(a), eta(c)))
        out.append(Verdict(f"{eta.name} tensor compatibility", lhs == rhs, None if lhs == rhs else f"{eta.name}_(AC)"))
    ok = compose(eta(unit), F.F0) == G.F0
    out.append(Verdict(f"{eta.name} unit compatibility", ok, None if ok else f"{eta.name}_I"))
    return out


def check_monoidal_nat_trans_lift(eta: NatTransData, F: MonoidalFunctorData, G: MonoidalFunctorData,
                                  samples: Iterable[tuple[ArrowObject, ArrowObject]],
                                  structure: MonoidalStructure = DEFAULT,
                                  validate_on: tuple = None) -> Verdict:
    """Tensor cube and unit prism of the lifted transformation on sampled pairs.

    ``validate_on = (objects, morphisms)`` first checks the ambient axioms
    and raises NotMonoidalNatTrans if they fail.
    """
    if validate_on is not None:
        objects, morphisms = validate_on
        v = all_of(eta.name, monoidal_nat_trans_verdicts(eta, F, G, objects, morphisms, structure.category.unit))
        if not v:
            raise NotMonoidalNatTrans(f"{eta.name} is not monoidal: {v.detail}")
    LF = LiftedMonoidalFunctor(F, structure)
    LG = LiftedMonoidalFunctor(G, structure)
    S = structure
    t = S.tensor

    def comp(f):
        return ArrowMorphism(LF(f), LG(f), eta(f.src), eta(f.dst))

    verdicts = []
    for f, g in samples:
        d = Diagram(f"{eta.name}~ tensor cube")
        d.vertex("FfFg", t(LF(f), LF(g)))
        d.vertex("GfGg", t(LG(f), LG(g)))
        d.vertex("F(fg)", LF(t(f, g)))
        d.vertex("G(fg)", LG(t(f, g)))
        d.edge("eta_f(x)eta_g", "FfFg", "GfGg", lambda: S.tensor_morphisms(comp(f), comp(g)))
        d.edge("G2_{f,g}", "GfGg", "G(fg)", lambda: LG.F2(f, g))
        d.edge("F2_{f,g}", "FfFg", "F(fg)", lambda: LF.F2(f, g))
        d.edge("eta_{fg}", "F(fg)", "G(fg)", lambda: comp(t(f, g)))
        d.path("eta_f(x)eta_g", "G2_{f,g}")
        d.path("F2_{f,g}", "eta_{fg}")
        verdicts.append(_safe(d))
    u = S.unit_arrow
    d = Diagram(f"{eta.name}~ unit prism")
    d.vertex("I", u)
    d.vertex("F(I)", LF(u))
    d.vertex("G(I)", LG(u))
    d.edge("F0", "I", "F(I)", lambda: LF.F0)
    d.edge("G0", "I", "G(I)", lambda: LG.F0)
    d.edge("eta_I", "F(I)", "G(I)", lambda: comp(u))
    d.path("F0", "eta_I")
    d.path("G0")
    verdicts.append(_safe(d))
    return all_of(f"{eta.name}~ monoidal", verdicts)


# -- example monoidal functors on Mat ---------------------------------------

def identity_monoidal_functor() -> MonoidalFunctorData:
    return MonoidalFunctorData(identity_functor(), lambda a, b: identity(a * b), identity(1), "Id")


def conjugation_monoidal_functor(P: Callable[[int], RatMatrix], name: str = "Conj") -> MonoidalFunctorData:
    """``M |-> P_b M P_v^-1`` with ``F2_{a,c} = P_{ac} (P_a^-1 (x) P_c^-1)``.

    Needs ``P_1 = [1]``; braided for any invertible family ``P``.
    """
    base = conjugation_functor(P, name)
    return MonoidalFunctorData(
        base, lambda a, c: compose(P(a * c), kronecker(invert(P(a)), invert(P(c)))), identity(1), name)


def doubling_monoidal_functor() -> MonoidalFunctorData:
    """``n |-> 2n``, ``M |-> M (x) I_2``: lax monoidal and braided.

    ``F2_{a,b}`` first moves the two doubling factors next to each other
    (``I_a (x) K_{2,b} (x) I_2``) and then multiplies them with the
    commutative basis-copying product on ``Q^2``; ``F0`` is its unit.
    """
    alg = basis_copying_algebra(2)
    base = FunctorData(lambda n: 2 * n, lambda m: kronecker(m, identity(2)), "covariant", "Dbl")

    def f2(a, b):
        shuffle = kron_all(identity(a), commutation_matrix(2, b), identity(2))
        return compose(kronecker(identity(a * b), alg.mult), shuffle)

    return MonoidalFunctorData(base, f2, alg.unit, "Dbl")
