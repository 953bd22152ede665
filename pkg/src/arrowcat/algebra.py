"""Monoids, comonoids, bialgebras, Frobenius and Hopf objects, ambient and in ``Arr``.

A morphism ``f: A -> B`` that respects the structure maps of two algebras
becomes an algebra object of ``Arr`` with lifted maps ``mu~ = (mu_A, mu_B)``
and so on. Each axiom is written once, as a :class:`Diagram` builder over an
abstract monoidal structure; the ambient checks run it on
:class:`AmbientStructure` with matrices, the arrow checks on
:class:`MonoidalStructure` with lifted squares.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .arrow import ArrowMorphism, ArrowObject, arrow_dagger
from .diagram import Diagram, Verdict, all_of, check_diagram
from .errors import ArrowcatError, NotAMorphism, NotUnitary, ShapeMismatch
from .exactmat.algebras import AlgebraData, basis_copying_algebra, group_algebra
from .exactmat.categories import MAT_Q, ConcreteCategory
from .exactmat.matrix import RatMatrix, compose, kronecker, transpose
from .monoidal import AmbientStructure, MonoidalStructure

__all__ = [
    "AlgebraData", "ArrowAlgebra", "basis_copying_algebra", "check_algebra", "check_arrow_bialgebra",
    "check_arrow_comonoid", "check_arrow_dagger_frobenius", "check_arrow_frobenius", "check_arrow_hopf",
    "check_arrow_monoid", "check_bialgebra", "check_comonoid", "check_dagger", "check_frobenius",
    "check_hopf", "check_monoid", "group_algebra", "is_structure_morphism", "make_arrow_algebra",
]

Maps = dict[str, Any]


def _get(maps: Maps, key: str):
    m = maps[key]
    return m() if callable(m) and not isinstance(m, RatMatrix) and not hasattr(m, "top") else m


def _run(d: Diagram) -> Verdict:
    try:
        return check_diagram(d)
    except ArrowcatError as exc:
        return Verdict(d.name, False, None, None, f"{type(exc).__name__}: {exc}")


# -- diagram builders (level-agnostic) ---------------------------------------
#
# ``S`` is a MonoidalStructure or AmbientStructure, ``X`` the carrier (an
# ArrowObject or a dimension) and ``maps`` holds mu / eta / delta / eps / S,
# each either a value or a zero-argument thunk.

def associativity(S, X, maps: Maps, tag: str = "") -> Verdict:
    t, m = S.tensor, lambda: _get(maps, "mu")
    d = Diagram(f"{tag}associativity")
    d.vertex("(XX)X", t(t(X, X), X))
    d.vertex("X(XX)", t(X, t(X, X)))
    d.vertex("XX", t(X, X))
    d.vertex("X", X)
    d.edge("mu(x)id", "(XX)X", "XX", lambda: S.tensor_morphisms(m(), S.identity(X)))
    d.edge("a", "(XX)X", "X(XX)", lambda: S.associator(X, X, X))
    d.edge("id(x)mu", "X(XX)", "XX", lambda: S.tensor_morphisms(S.identity(X), m()))
    d.edge("mu", "XX", "X", m)
    d.path("mu(x)id", "mu")
    d.path("a", "id(x)mu", "mu")
    return _run(d)


def unit_laws(S, X, maps: Maps, tag: str = "") -> Verdict:
    t, u = S.tensor, S.unit_object
    m, e = (lambda: _get(maps, "mu")), (lambda: _get(maps, "eta"))
    left = Diagram(f"{tag}left unit law")
    left.vertex("IX", t(u, X))
    left.vertex("XX", t(X, X))
    left.vertex("X", X)
    left.edge("eta(x)id", "IX", "XX", lambda: S.tensor_morphisms(e(), S.identity(X)))
    left.edge("mu", "XX", "X", m)
    left.edge("l", "IX", "X", lambda: S.left_unitor(X))
    left.path("eta(x)id", "mu")
    left.path("l")
    right = Diagram(f"{tag}right unit law")
    right.vertex("XI", t(X, u))
    right.vertex("XX", t(X, X))
    right.vertex("X", X)
    right.edge("id(x)eta", "XI", "XX", lambda: S.tensor_morphisms(S.identity(X), e()))
    right.edge("mu", "XX", "X", m)
    right.edge("r", "XI", "X", lambda: S.right_unitor(X))
    right.path("id(x)eta", "mu")
    right.path("r")
    return all_of(f"{tag}unit laws", [_run(left), _run(right)])


def commutativity(S, X, maps: Maps, tag: str = "") -> Verdict:
    d = Diagram(f"{tag}commutativity")
    d.vertex("XX", S.tensor(X, X))
    d.vertex("X", X)
    d.edge("s", "XX", "XX", lambda: S.braiding(X, X))
    d.edge("mu", "XX", "X", lambda: _get(maps, "mu"))
    d.path("s", "mu")
    d.path("mu")
    return _run(d)


def coassociativity(S, X, maps: Maps, tag: str = "") -> Verdict:
    t, c = S.tensor, lambda: _get(maps, "delta")
    d = Diagram(f"{tag}coassociativity")
    d.vertex("X", X)
    d.vertex("XX", t(X, X))
    d.vertex("(XX)X", t(t(X, X), X))
    d.vertex("X(XX)", t(X, t(X, X)))
    d.edge("delta", "X", "XX", c)
    d.edge("delta(x)id", "XX", "(XX)X", lambda: S.tensor_morphisms(c(), S.identity(X)))
    d.edge("id(x)delta", "XX", "X(XX)", lambda: S.tensor_morphisms(S.identity(X), c()))
    d.edge("a^-1", "X(XX)", "(XX)X", lambda: S.associator_inverse(X, X, X))
    d.path("delta", "delta(x)id")
    d.path("delta", "id(x)delta", "a^-1")
    return _run(d)


def counit_laws(S, X, maps: Maps, tag: str = "") -> Verdict:
    t, u = S.tensor, S.unit_object
    c, e = (lambda: _get(maps, "delta")), (lambda: _get(maps, "eps"))
    left = Diagram(f"{tag}left counit law")
    left.vertex("X", X)
    left.vertex("XX", t(X, X))
    left.vertex("IX", t(u, X))
    left.edge("delta", "X", "XX", c)
    left.edge("eps(x)id", "XX", "IX", lambda: S.tensor_morphisms(e(), S.identity(X)))
    left.edge("l^-1", "X", "IX", lambda: S.inverse(S.left_unitor(X)))
    left.path("delta", "eps(x)id")
    left.path("l^-1")
    right = Diagram(f"{tag}right counit law")
    right.vertex("X", X)
    right.vertex("XX", t(X, X))
    right.vertex("XI", t(X, u))
    right.edge("delta", "X", "XX", c)
    right.edge("id(x)eps", "XX", "XI", lambda: S.tensor_morphisms(S.identity(X), e()))
    right.edge("r^-1", "X", "XI", lambda: S.inverse(S.right_unitor(X)))
    right.path("delta", "id(x)eps")
    right.path("r^-1")
    return all_of(f"{tag}counit laws", [_run(left), _run(right)])


def cocommutativity(S, X, maps: Maps, tag: str = "") -> Verdict:
    d = Diagram(f"{tag}cocommutativity")
    d.vertex("X", X)
    d.vertex("XX", S.tensor(X, X))
    d.edge("delta", "X", "XX", lambda: _get(maps, "delta"))
    d.edge("s", "XX", "XX", lambda: S.braiding(X, X))
    d.path("delta", "s")
    d.path("delta")
    return _run(d)


def middle_swap(S, w, x, y, z):
    """``(w x)(y z) -> (w y)(x z)`` through explicit associators and one braiding."""
    t = S.tensor
    steps = [
        S.associator(w, x, t(y, z)),
        S.tensor_morphisms(S.identity(w), S.associator_inverse(x, y, z)),
        S.tensor_morphisms(S.identity(w), S.tensor_morphisms(S.braiding(x, y), S.identity(z))),
        S.tensor_morphisms(S.identity(w), S.associator(y, x, z)),
        S.associator_inverse(w, y, t(x, z)),
    ]
    out = steps[0]
    for s in steps[1:]:
        out = s @ out
    return out


def bialgebra_laws(S, X, maps: Maps, tag: str = "") -> Verdict:
    """Both compatibility squares and both unit-side axioms."""
    t, u = S.tensor, S.unit_object
    m, c = (lambda: _get(maps, "mu")), (lambda: _get(maps, "delta"))
    e, k = (lambda: _get(maps, "eta")), (lambda: _get(maps, "eps"))
    XX = t(X, X)
    one = Diagram(f"{tag}bialgebra (delta.mu)")
    one.vertex("XX", XX)
    one.vertex("X", X)
    one.vertex("(XX)(XX)", t(XX, XX))
    one.edge("mu", "XX", "X", m)
    one.edge("delta", "X", "XX", c)
    one.edge("delta(x)delta", "XX", "(XX)(XX)", lambda: S.tensor_morphisms(c(), c()))
    one.edge("id(x)s(x)id", "(XX)(XX)", "(XX)(XX)", lambda: middle_swap(S, X, X, X, X))
    one.edge("mu(x)mu", "(XX)(XX)", "XX", lambda: S.tensor_morphisms(m(), m()))
    one.path("mu", "delta")
    one.path("delta(x)delta", "id(x)s(x)id", "mu(x)mu")

    two = Diagram(f"{tag}bialgebra (eps.mu)")
    two.vertex("XX", XX)
    two.vertex("X", X)
    two.vertex("II", t(u, u))
    two.vertex("I", u)
    two.edge("mu", "XX", "X", m)
    two.edge("eps", "X", "I", k)
    two.edge("eps(x)eps", "XX", "II", lambda: S.tensor_morphisms(k(), k()))
    two.edge("l_I", "II", "I", lambda: S.left_unitor(u))
    two.path("mu", "eps")
    two.path("eps(x)eps", "l_I")

    three = Diagram(f"{tag}bialgebra (delta.eta)")
    three.vertex("I", u)
    three.vertex("X", X)
    three.vertex("XX", XX)
    three.vertex("II", t(u, u))
    three.edge("eta", "I", "X", e)
    three.edge("delta", "X", "XX", c)
    three.edge("l_I^-1", "I", "II", lambda: S.inverse(S.left_unitor(u)))
    three.edge("eta(x)eta", "II", "XX", lambda: S.tensor_morphisms(e(), e()))
    three.path("eta", "delta")
    three.path("l_I^-1", "eta(x)eta")

    four = Diagram(f"{tag}bialgebra (eps.eta)")
    four.vertex("I", u)
    four.vertex("X", X)
    four.edge("eta", "I", "X", e)
    four.edge("eps", "X", "I", k)
    four.edge("id_I", "I", "I", lambda: S.identity(u))
    four.path("eta", "eps")
    four.path("id_I")
    return all_of(f"{tag}bialgebra", [_run(one), _run(two), _run(three), _run(four)])


def frobenius_law(S, X, maps: Maps, tag: str = "") -> Verdict:
    """``(id (x) mu) . a . (delta (x) id) == delta . mu == (mu (x) id) . a^-1 . (id (x) delta)``."""
    t = S.tensor
    m, c = (lambda: _get(maps, "mu")), (lambda: _get(maps, "delta"))
    d = Diagram(f"{tag}Frobenius law")
    d.vertex("XX", t(X, X))
    d.vertex("X", X)
    d.vertex("(XX)X", t(t(X, X), X))
    d.vertex("X(XX)", t(X, t(X, X)))
    d.edge("mu", "XX", "X", m)
    d.edge("delta", "X", "XX", c)
    d.edge("delta(x)id", "XX", "(XX)X", lambda: S.tensor_morphisms(c(), S.identity(X)))
    d.edge("a", "(XX)X", "X(XX)", lambda: S.associator(X, X, X))
    d.edge("id(x)mu", "X(XX)", "XX", lambda: S.tensor_morphisms(S.identity(X), m()))
    d.edge("id(x)delta", "XX", "X(XX)", lambda: S.tensor_morphisms(S.identity(X), c()))
    d.edge("a^-1", "X(XX)", "(XX)X", lambda: S.associator_inverse(X, X, X))
    d.edge("mu(x)id", "(XX)X", "XX", lambda: S.tensor_morphisms(m(), S.identity(X)))
    d.path("mu", "delta")
    d.path("delta(x)id", "a", "id(x)mu")
    d.path("id(x)delta", "a^-1", "mu(x)id")
    return _run(d)


def special_law(S, X, maps: Maps, tag: str = "") -> Verdict:
    d = Diagram(f"{tag}special law")
    d.vertex("X", X)
    d.vertex("XX", S.tensor(X, X))
    d.edge("delta", "X", "XX", lambda: _get(maps, "delta"))
    d.edge("mu", "XX", "X", lambda: _get(maps, "mu"))
    d.edge("id", "X", "X", lambda: S.identity(X))
    d.path("delta", "mu")
    d.path("id")
    return _run(d)


def antipode_laws(S, X, maps: Maps, tag: str = "") -> Verdict:
    t, u = S.tensor, S.unit_object
    m, c = (lambda: _get(maps, "mu")), (lambda: _get(maps, "delta"))
    anti = lambda: _get(maps, "S")  # noqa: E731
    d = Diagram(f"{tag}antipode laws")
    d.vertex("X", X)
    d.vertex("XX", t(X, X))
    d.vertex("I", u)
    d.edge("delta", "X", "XX", c)
    d.edge("id(x)S", "XX", "XX", lambda: S.tensor_morphisms(S.identity(X), anti()))
    d.edge("S(x)id", "XX", "XX", lambda: S.tensor_morphisms(anti(), S.identity(X)))
    d.edge("mu", "XX", "X", m)
    d.edge("eps", "X", "I", lambda: _get(maps, "eps"))
    d.edge("eta", "I", "X", lambda: _get(maps, "eta"))
    d.path("eps", "eta")
    d.path("delta", "id(x)S", "mu")
    d.path("delta", "S(x)id", "mu")
    return _run(d)


# -- ambient suites ----------------------------------------------------------

def _ambient_maps(a: AlgebraData) -> Maps:
    return {"mu": a.mult, "eta": a.unit, "delta": a.comult, "eps": a.counit, "S": a.antipode}


def _need(a: AlgebraData, *attrs: str) -> None:
    missing = [x for x in attrs if getattr(a, x) is None]
    if missing:
        raise ValueError(f"{a.name or 'algebra'} has no {', '.join(missing)}")


def check_monoid(a: AlgebraData, category: ConcreteCategory = MAT_Q) -> Verdict:
    _need(a, "mult", "unit")
    S, X, mp = AmbientStructure(category), a.carrier, _ambient_maps(a)
    vs = [associativity(S, X, mp), unit_laws(S, X, mp)]
    if a.has("commutative"):
        vs.append(commutativity(S, X, mp))
    return all_of(f"{a.name} monoid", vs)


def check_comonoid(a: AlgebraData, category: ConcreteCategory = MAT_Q) -> Verdict:
    _need(a, "comult", "counit")
    S, X, mp = AmbientStructure(category), a.carrier, _ambient_maps(a)
    vs = [coassociativity(S, X, mp), counit_laws(S, X, mp)]
    if a.has("cocommutative"):
        vs.append(cocommutativity(S, X, mp))
    return all_of(f"{a.name} comonoid", vs)


def check_bialgebra(a: AlgebraData, category: ConcreteCategory = MAT_Q) -> Verdict:
    _need(a, "mult", "unit", "comult", "counit")
    return all_of(f"{a.name} bialgebra", [
        check_monoid(a, category), check_comonoid(a, category),
        bialgebra_laws(AmbientStructure(category), a.carrier, _ambient_maps(a))])


def check_frobenius(a: AlgebraData, category: ConcreteCategory = MAT_Q) -> Verdict:
    _need(a, "mult", "unit", "comult", "counit")
    S, X, mp = AmbientStructure(category), a.carrier, _ambient_maps(a)
    vs = [check_monoid(a, category), check_comonoid(a, category), frobenius_law(S, X, mp)]
    if a.has("special"):
        vs.append(special_law(S, X, mp))
    return all_of(f"{a.name} Frobenius", vs)


def check_dagger(a: AlgebraData) -> Verdict:
    """``Delta == mu^T`` and ``epsilon == eta^T``."""
    _need(a, "mult", "unit", "comult", "counit")
    if a.comult != transpose(a.mult):
        return Verdict(f"{a.name} dagger", False, "delta vs mu^T")
    if a.counit != transpose(a.unit):
        return Verdict(f"{a.name} dagger", False, "eps vs eta^T")
    return Verdict.ok(f"{a.name} dagger")


def check_hopf(a: AlgebraData, category: ConcreteCategory = MAT_Q) -> Verdict:
    _need(a, "antipode")
    return all_of(f"{a.name} Hopf", [
        check_bialgebra(a, category),
        antipode_laws(AmbientStructure(category), a.carrier, _ambient_maps(a))])


def check_algebra(a: AlgebraData, category: ConcreteCategory = MAT_Q) -> Verdict:
    """Every suite the flags claim."""
    vs = []
    if a.has("monoid"):
        vs.append(check_monoid(a, category))
    if a.has("comonoid"):
        vs.append(check_comonoid(a, category))
    if a.has("bialgebra"):
        vs.append(check_bialgebra(a, category))
    if a.has("frobenius"):
        vs.append(check_frobenius(a, category))
    if a.has("dagger"):
        vs.append(check_dagger(a))
    if a.has("hopf"):
        vs.append(check_hopf(a, category))
    return all_of(a.name or "algebra", vs)


# -- structure morphisms -----------------------------------------------------

KIND_MAPS = {
    "monoid": ("mult", "unit"),
    "comonoid": ("comult", "counit"),
    "frobenius": ("mult", "unit", "comult", "counit"),
    "bialgebra": ("mult", "unit", "comult", "counit"),
    "hopf": ("mult", "unit", "comult", "counit", "antipode"),
}

SQUARE_NAMES = {"mult": "mu", "unit": "eta", "comult": "delta", "counit": "eps", "antipode": "S"}


def _square_holds(attr: str, f: RatMatrix, src: AlgebraData, dst: AlgebraData) -> bool:
    a, b = getattr(src, attr), getattr(dst, attr)
    if attr == "mult":
        return compose(b, kronecker(f, f)) == compose(f, a)
    if attr == "unit":
        return compose(f, a) == b
    if attr == "comult":
        return compose(kronecker(f, f), a) == compose(b, f)
    if attr == "counit":
        return compose(b, f) == a
    return compose(b, f) == compose(f, a)


def failing_squares(f: RatMatrix, src: AlgebraData, dst: AlgebraData, attrs) -> list[str]:
    if f.shape != (dst.carrier, src.carrier):
        raise ShapeMismatch(f"a map {src.carrier} -> {dst.carrier} must be {dst.carrier}x{src.carrier}, "
                            f"got {f.rows}x{f.cols}")
    out = []
    for attr in attrs:
        if getattr(src, attr) is None or getattr(dst, attr) is None:
            continue
        if not _square_holds(attr, f, src, dst):
            out.append(SQUARE_NAMES[attr])
    return out


def is_structure_morphism(f: RatMatrix, src: AlgebraData, dst: AlgebraData, kind: str) -> bool:
    if kind not in KIND_MAPS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {sorted(KIND_MAPS)}")
    attrs = KIND_MAPS[kind]
    for alg in (src, dst):
        missing = [x for x in attrs if getattr(alg, x) is None]
        if missing:
            raise ValueError(f"{alg.name or 'algebra'} lacks {', '.join(missing)} needed for kind {kind!r}")
    return not failing_squares(f, src, dst, attrs)


# -- algebra objects of Arr --------------------------------------------------

@dataclass(frozen=True)
class ArrowAlgebra:
    """Algebra object on the arrow ``object: A -> B``.

    The lifted maps are built on access, so a corrupted component surfaces
    as a SquareBroken at the edge that uses it.
    """

    object: ArrowObject
    source: AlgebraData
    target: AlgebraData
    structure: MonoidalStructure = MonoidalStructure(MAT_Q)

    @property
    def flags(self) -> frozenset:
        return self.source.flags & self.target.flags

    def has(self, flag: str) -> bool:
        return flag in self.flags

    def _lift(self, attr: str, src: ArrowObject, dst: ArrowObject) -> ArrowMorphism:
        a, b = getattr(self.source, attr), getattr(self.target, attr)
        if a is None or b is None:
            raise ValueError(f"both algebras need {attr}")
        return ArrowMorphism(src, dst, a, b)

    @property
    def mu(self) -> ArrowMorphism:
        f = self.object
        return self._lift("mult", self.structure.tensor(f, f), f)

    @property
    def eta(self) -> ArrowMorphism:
        return self._lift("unit", self.structure.unit_arrow, self.object)

    @property
    def delta(self) -> ArrowMorphism:
        f = self.object
        return self._lift("comult", f, self.structure.tensor(f, f))

    @property
    def eps(self) -> ArrowMorphism:
        return self._lift("counit", self.object, self.structure.unit_arrow)

    @property
    def antipode(self) -> ArrowMorphism:
        return self._lift("antipode", self.object, self.object)

    def maps(self) -> Maps:
        return {"mu": lambda: self.mu, "eta": lambda: self.eta, "delta": lambda: self.delta,
                "eps": lambda: self.eps, "S": lambda: self.antipode}


def make_arrow_algebra(f: ArrowObject, src: AlgebraData, dst: AlgebraData,
                       structure: MonoidalStructure | None = None) -> ArrowAlgebra:
    """Raises NotAMorphism naming the first structure square ``f`` breaks."""
    bad = failing_squares(f.map, src, dst, ("mult", "unit", "comult", "counit", "antipode"))
    if bad:
        raise NotAMorphism(f"the {bad[0]} square fails for {src.name} -> {dst.name}")
    return ArrowAlgebra(f, src, dst, structure or MonoidalStructure(MAT_Q))


def _require(aa: ArrowAlgebra, *attrs: str) -> None:
    for alg in (aa.source, aa.target):
        _need(alg, *attrs)


def check_arrow_monoid(aa: ArrowAlgebra) -> Verdict:
    _require(aa, "mult", "unit")
    S, X, mp = aa.structure, aa.object, aa.maps()
    vs = [associativity(S, X, mp, "Arr "), unit_laws(S, X, mp, "Arr ")]
    if aa.has("commutative"):
        vs.append(commutativity(S, X, mp, "Arr "))
    return all_of("Arr monoid", vs)


def check_arrow_comonoid(aa: ArrowAlgebra) -> Verdict:
    _require(aa, "comult", "counit")
    S, X, mp = aa.structure, aa.object, aa.maps()
    vs = [coassociativity(S, X, mp, "Arr "), counit_laws(S, X, mp, "Arr ")]
    if aa.has("cocommutative"):
        vs.append(cocommutativity(S, X, mp, "Arr "))
    return all_of("Arr comonoid", vs)


def check_arrow_bialgebra(aa: ArrowAlgebra) -> Verdict:
    """Arr-level compatibility laws, plus the unit-side axioms at the ambient level for both ends."""
    _require(aa, "mult", "unit", "comult", "counit")
    S, X, mp = aa.structure, aa.object, aa.maps()
    amb = AmbientStructure(S.category)
    vs = [bialgebra_laws(S, X, mp, "Arr ")]
    for alg in (aa.source, aa.target):
        vs.append(bialgebra_laws(amb, alg.carrier, _ambient_maps(alg), f"{alg.name} "))
    return all_of("Arr bialgebra", vs)


def check_arrow_frobenius(aa: ArrowAlgebra) -> Verdict:
    _require(aa, "mult", "unit", "comult", "counit")
    S, X, mp = aa.structure, aa.object, aa.maps()
    vs = [frobenius_law(S, X, mp, "Arr ")]
    if aa.has("special"):
        vs.append(special_law(S, X, mp, "Arr "))
    return all_of("Arr Frobenius", vs)


def check_arrow_dagger_frobenius(aa: ArrowAlgebra) -> Verdict:
    """``dagger(Delta~) == mu~`` and ``dagger(eps~) == eta~``; needs an orthogonal ``f``."""
    _require(aa, "mult", "unit", "comult", "counit")
    f = aa.object
    if not f.map.is_orthogonal():
        raise NotUnitary("the dagger Frobenius check needs a unitary arrow object")
    S = aa.structure
    d = Diagram("Arr dagger Frobenius")
    d.vertex("ff", S.tensor(f, f))
    d.vertex("f", f)
    d.vertex("I", S.unit_arrow)
    d.edge("dagger(delta~)", "ff", "f", lambda: arrow_dagger(aa.delta))
    d.edge("mu~", "ff", "f", lambda: aa.mu)
    d.path("dagger(delta~)")
    d.path("mu~")
    e = Diagram("Arr dagger Frobenius (unit)")
    e.vertex("I", S.unit_arrow)
    e.vertex("f", f)
    e.edge("dagger(eps~)", "I", "f", lambda: arrow_dagger(aa.eps))
    e.edge("eta~", "I", "f", lambda: aa.eta)
    e.path("dagger(eps~)")
    e.path("eta~")
    return all_of("Arr dagger Frobenius", [check_arrow_frobenius(aa), _run(d), _run(e)])


def check_arrow_hopf(aa: ArrowAlgebra) -> Verdict:
    _require(aa, "mult", "unit", "comult", "counit", "antipode")
    return all_of("Arr Hopf", [check_arrow_bialgebra(aa),
                               antipode_laws(aa.structure, aa.object, aa.maps(), "Arr ")])
