"""The arrow category of a matrix category.

Objects are matrices ``h: A -> B`` and morphisms are commuting squares
``(top, bottom)`` with ``target.map . top == bottom . source.map``. Squares are
validated when constructed, so everything downstream may assume them.

Functors and natural transformations are extensional: Python callables on
dimensions and matrices, checked on samples rather than proved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .diagram import Diagram, Verdict, all_of, check_diagram
from .errors import (
    ArrowcatError,
    NotAdmitted,
    NotAFunctor,
    NotComposable,
    NotNatural,
    NotUnitary,
    ShapeMismatch,
    SquareBroken,
)
from .exactmat.categories import ConcreteCategory
from .exactmat.matrix import RatMatrix, compose, identity, invert, transpose


@dataclass(frozen=True)
class ArrowObject:
    """A morphism ``map: src -> dst`` viewed as an object (a ``dst x src`` matrix)."""

    src: int
    dst: int
    map: RatMatrix

    def __post_init__(self):
        if self.map.shape != (self.dst, self.src):
            raise ShapeMismatch(f"arrow {self.src} -> {self.dst} needs a {self.dst}x{self.src} matrix, "
                                f"got {self.map.rows}x{self.map.cols}")

    @classmethod
    def of(cls, m: RatMatrix, category: ConcreteCategory | None = None) -> ArrowObject:
        if category is not None and not category.is_morphism(m):
            raise NotAdmitted(f"{m!r} is not a morphism of {category.tag}")
        return cls(m.cols, m.rows, m)

    def __repr__(self) -> str:
        return f"ArrowObject({self.src} -> {self.dst}, {self.map!r})"


@dataclass(frozen=True)
class ArrowMorphism:
    """A commuting square ``(top, bottom): source -> target``."""

    source: ArrowObject
    target: ArrowObject
    top: RatMatrix
    bottom: RatMatrix

    def __post_init__(self):
        s, t = self.source, self.target
        if self.top.shape != (t.src, s.src):
            raise ShapeMismatch(f"top component must be {t.src}x{s.src}, got {self.top.shape}")
        if self.bottom.shape != (t.dst, s.dst):
            raise ShapeMismatch(f"bottom component must be {t.dst}x{s.dst}, got {self.bottom.shape}")
        if compose(t.map, self.top) != compose(self.bottom, s.map):
            raise SquareBroken("target.map . top != bottom . source.map")

    def __matmul__(self, other: ArrowMorphism) -> ArrowMorphism:
        if not isinstance(other, ArrowMorphism):
            return NotImplemented
        return arrow_compose(self, other)

    def __repr__(self) -> str:
        return f"ArrowMorphism(top={self.top!r}, bottom={self.bottom!r})"


def arrow_compose(psi: ArrowMorphism, phi: ArrowMorphism) -> ArrowMorphism:
    """``psi . phi`` componentwise (``phi`` first)."""
    if phi.target != psi.source:
        raise NotComposable("phi.target differs from psi.source")
    # the constructor re-verifies the composite square
    return ArrowMorphism(phi.source, psi.target, compose(psi.top, phi.top), compose(psi.bottom, phi.bottom))


def arrow_id(f: ArrowObject) -> ArrowMorphism:
    return ArrowMorphism(f, f, identity(f.src), identity(f.dst))


def arrow_inverse(phi: ArrowMorphism) -> ArrowMorphism:
    """Componentwise inverse; raises NotInvertible if a component is singular."""
    return ArrowMorphism(phi.target, phi.source, invert(phi.top), invert(phi.bottom))


def is_arrow_iso(phi: ArrowMorphism) -> bool:
    try:
        arrow_inverse(phi)
    except ArrowcatError:
        return False
    return True


# -- dagger ------------------------------------------------------------------

def arrow_dagger(phi: ArrowMorphism) -> ArrowMorphism:
    """``(top^T, bottom^T): target -> source``.

    The reversed square commutes when both components are unitary, and also
    when both objects are unitary; anything else raises NotUnitary.
    """
    comps = phi.top.is_orthogonal() and phi.bottom.is_orthogonal()
    objs = phi.source.map.is_orthogonal() and phi.target.map.is_orthogonal()
    if not (comps or objs):
        raise NotUnitary("dagger needs unitary components (or unitary source and target objects)")
    return ArrowMorphism(phi.target, phi.source, transpose(phi.top), transpose(phi.bottom))


# -- functors ----------------------------------------------------------------

@dataclass(frozen=True)
class FunctorData:
    on_objects: Callable[[int], int]
    on_morphisms: Callable[[RatMatrix], RatMatrix]
    variance: str = "covariant"
    name: str = "F"

    def __post_init__(self):
        if self.variance not in ("covariant", "contravariant"):
            raise ValueError(f"variance must be covariant or contravariant, not {self.variance!r}")

    @property
    def covariant(self) -> bool:
        return self.variance == "covariant"

    def obj(self, n: int) -> int:
        return self.on_objects(n)

    def __call__(self, m: RatMatrix) -> RatMatrix:
        return self.on_morphisms(m)


def functor_verdicts(F: FunctorData, pairs: Iterable[tuple[RatMatrix, RatMatrix]]) -> list[Verdict]:
    """Sampled functor laws; each pair ``(g, f)`` must be composable as ``g . f``."""
    out = []
    for k, (g, f) in enumerate(pairs):
        for n in (f.cols, f.rows, g.rows):
            if F(identity(n)) != identity(F.obj(n)):
                out.append(Verdict(f"{F.name}: identity law", False, f"{F.name}(id_{n})"))
                return out
        Ff, Fg = F(f), F(g)
        want = (F.obj(f.cols), F.obj(f.rows)) if F.covariant else (F.obj(f.rows), F.obj(f.cols))
        if (Ff.cols, Ff.rows) != want:
            out.append(Verdict(f"{F.name}: endpoints", False, f"{F.name}(f) sample {k}"))
            return out
        lhs = F(compose(g, f))
        rhs = compose(Fg, Ff) if F.covariant else compose(Ff, Fg)
        out.append(Verdict(f"{F.name}: composition sample {k}", lhs == rhs,
                           None if lhs == rhs else f"{F.name}(g.f)"))
    return out


def validate_functor(F: FunctorData, pairs) -> None:
    v = all_of(F.name, functor_verdicts(F, pairs))
    if not v:
        raise NotAFunctor(f"{F.name} fails its laws at {v.failing_edge}")


@dataclass(frozen=True)
class LiftedFunctor:
    """The functor induced on arrow categories."""

    base: FunctorData

    @property
    def name(self) -> str:
        return f"{self.base.name}~"

    def on_object(self, f: ArrowObject) -> ArrowObject:
        F = self.base
        return ArrowObject.of(F(f.map))

    def on_morphism(self, phi: ArrowMorphism) -> ArrowMorphism:
        F = self.base
        src, tgt = self.on_object(phi.source), self.on_object(phi.target)
        if F.covariant:
            return ArrowMorphism(src, tgt, F(phi.top), F(phi.bottom))
        # F(h): F(B) -> F(A), so the square reverses and its components swap rows
        return ArrowMorphism(tgt, src, F(phi.bottom), F(phi.top))

    def __call__(self, x):
        return self.on_morphism(x) if isinstance(x, ArrowMorphism) else self.on_object(x)


def lift_functor(F: FunctorData, samples: Sequence[tuple[RatMatrix, RatMatrix]] | None = None) -> LiftedFunctor:
    if samples is not None:
        validate_functor(F, samples)
    return LiftedFunctor(F)


def check_lifted_functor(FL: LiftedFunctor, pairs: Iterable[tuple[ArrowMorphism, ArrowMorphism]]) -> Verdict:
    """Identity and composition laws of a lifted functor on composable squares ``(psi, phi)``."""
    verdicts = []
    for k, (psi, phi) in enumerate(pairs):
        for f in (phi.source, phi.target, psi.target):
            try:
                ok = FL(arrow_id(f)) == arrow_id(FL(f))
            except ArrowcatError as exc:
                verdicts.append(Verdict(f"identity {k}", False, f"{FL.name}(id)", None, str(exc)))
                continue
            verdicts.append(Verdict(f"identity {k}", ok, None if ok else f"{FL.name}(id_f)"))
        try:
            lhs = FL(psi @ phi)
            rhs = FL(psi) @ FL(phi) if FL.base.covariant else FL(phi) @ FL(psi)
        except ArrowcatError as exc:
            verdicts.append(Verdict(f"composition {k}", False, f"{FL.name}(psi.phi)", None, str(exc)))
            continue
        verdicts.append(Verdict(f"composition {k}", lhs == rhs, None if lhs == rhs else f"{FL.name}(psi.phi)"))
    return all_of(f"{FL.name} functor laws", verdicts)


def identity_functor() -> FunctorData:
    return FunctorData(lambda n: n, lambda m: m, "covariant", "Id")


def transpose_functor() -> FunctorData:
    return FunctorData(lambda n: n, transpose, "contravariant", "T")


def conjugation_functor(P: Callable[[int], RatMatrix], name: str = "Conj") -> FunctorData:
    """Object-preserving functor ``M: v -> b  |->  P_b M P_v^-1``."""
    cache: dict[int, RatMatrix] = {}

    def inv(n):
        if n not in cache:
            cache[n] = invert(P(n))
        return cache[n]

    return FunctorData(lambda n: n, lambda m: compose(compose(P(m.rows), m), inv(m.cols)), "covariant", name)


def compose_functors(G: FunctorData, F: FunctorData) -> FunctorData:
    """``G . F`` (apply ``F`` first)."""
    variance = "covariant" if F.covariant == G.covariant else "contravariant"
    return FunctorData(lambda n: G.obj(F.obj(n)), lambda m: G(F(m)), variance, f"{G.name}{F.name}")


# -- natural transformations ---------------------------------------------------

@dataclass(frozen=True)
class NatTransData:
    """Components ``eta_A: F(A) -> G(A)`` (not a monoid unit)."""

    source: FunctorData
    target: FunctorData
    component: Callable[[int], RatMatrix]
    name: str = "eta"

    def __call__(self, n: int) -> RatMatrix:
        return self.component(n)


def naturality_verdict(eta: NatTransData, f: RatMatrix) -> Verdict:
    F, G = eta.source, eta.target
    try:
        lhs = compose(G(f), eta(f.cols))
        rhs = compose(eta(f.rows), F(f))
    except ArrowcatError as exc:
        return Verdict(f"{eta.name} naturality", False, f"{eta.name}_A", None, str(exc))
    return Verdict(f"{eta.name} naturality", lhs == rhs, None if lhs == rhs else f"{eta.name} square")


def validate_nat_trans(eta: NatTransData, morphisms: Iterable[RatMatrix]) -> None:
    v = all_of(eta.name, (naturality_verdict(eta, f) for f in morphisms))
    if not v:
        raise NotNatural(f"{eta.name} is not natural: {v.detail}")


@dataclass(frozen=True)
class LiftedNatTrans:
    base: NatTransData

    @property
    def name(self) -> str:
        return f"{self.base.name}~"

    @property
    def source(self) -> LiftedFunctor:
        return LiftedFunctor(self.base.source)

    @property
    def target(self) -> LiftedFunctor:
        return LiftedFunctor(self.base.target)

    def component(self, f: ArrowObject) -> ArrowMorphism:
        eta = self.base
        return ArrowMorphism(self.source(f), self.target(f), eta(f.src), eta(f.dst))

    __call__ = component


def lift_nat_trans(eta: NatTransData, samples: Iterable[RatMatrix] | None = None) -> LiftedNatTrans:
    if not (eta.source.covariant and eta.target.covariant):
        raise ValueError("only natural transformations between covariant functors lift")
    if samples is not None:
        validate_nat_trans(eta, samples)
    return LiftedNatTrans(eta)


def check_lifted_naturality(eta: LiftedNatTrans, phi: ArrowMorphism) -> Verdict:
    """The naturality cube ``G~(phi) . eta~_f == eta~_f' . F~(phi)``."""
    F, G = eta.source, eta.target
    d = Diagram(f"{eta.name} naturality cube")
    d.vertex("Ff", F(phi.source))
    d.vertex("Ff'", F(phi.target))
    d.vertex("Gf", G(phi.source))
    d.vertex("Gf'", G(phi.target))
    d.edge("eta_f", "Ff", "Gf", lambda: eta(phi.source))
    d.edge("eta_f'", "Ff'", "Gf'", lambda: eta(phi.target))
    d.edge("F(phi)", "Ff", "Ff'", lambda: F(phi))
    d.edge("G(phi)", "Gf", "Gf'", lambda: G(phi))
    d.path("eta_f", "G(phi)")
    d.path("F(phi)", "eta_f'")
    return check_diagram(d)


def check_lifted_iso(eta: LiftedNatTrans, f: ArrowObject) -> Verdict:
    """The component at ``f`` has a two-sided inverse in the arrow category."""
    name = f"{eta.name} invertible at f"
    try:
        c = eta(f)
        inv = arrow_inverse(c)
    except ArrowcatError as exc:
        return Verdict(name, False, f"{eta.name}_f", None, f"{type(exc).__name__}: {exc}")
    ok = (inv @ c == arrow_id(c.source)) and (c @ inv == arrow_id(c.target))
    return Verdict(name, ok, None if ok else f"{eta.name}_f^-1")


@dataclass
class Report:
    """Named verdicts collected by a multi-diagram check."""

    entries: list[Verdict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.entries)

    def __bool__(self) -> bool:
        return self.passed

    def failures(self) -> list[Verdict]:
        return [v for v in self.entries if not v.passed]


def check_equivalence(F: FunctorData, G: FunctorData, epsilon: NatTransData, delta: NatTransData,
                      squares: Sequence[ArrowMorphism]) -> Report:
    """Verify lifted equivalence data on sampled squares.

    ``epsilon: F.G => id`` and ``delta: G.F => id``. For every sample the
    lifted functors must respect composition with the next sample (when
    composable), both lifted transformations must satisfy the naturality
    cube, and their components at source and target must be invertible.
    """
    report = Report()
    FL, GL = LiftedFunctor(F), LiftedFunctor(G)
    eps, dlt = LiftedNatTrans(epsilon), LiftedNatTrans(delta)
    for k, phi in enumerate(squares):
        for FF in (FL, GL):
            v = check_lifted_functor(FF, [(arrow_id(phi.target), phi)])
            v.check = f"{FF.name} functor laws #{k}"
            report.entries.append(v)
        for t in (eps, dlt):
            v = check_lifted_naturality(t, phi)
            v.check = f"{t.name} naturality cube #{k}"
            report.entries.append(v)
            for end in ("source", "target"):
                v = check_lifted_iso(t, getattr(phi, end))
                v.check = f"{t.name} invertible at {end} #{k}"
                report.entries.append(v)
    return report
