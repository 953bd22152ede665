"""Duals, pivots and twists on the arrow category.

An arrow object ``f: A -> B`` has a dual exactly when ``f`` is invertible.
In the matrix categories the dual object is forced to be the inverse
transpose ``f*: A* -> B*``, with evaluation ``d_f = (d_A, d_B)`` and
coevaluation ``b_f = (b_A, b_B): id_I -> f (x) f*``.
:func:`dual_solvability_oracle` recovers ``f*`` from the two defining
squares alone, which is how non-existence is decided for singular ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .arrow import ArrowMorphism, ArrowObject, arrow_id, arrow_inverse
from .diagram import Diagram, Verdict, all_of, check_diagram
from .errors import ArrowcatError, NoDual
from .exactmat.categories import MAT_Q, MAT_Q_CORE, ConcreteCategory
from .exactmat.matrix import (
    RatMatrix,
    compose,
    identity,
    invert,
    is_invertible,
    kron_all,
    kronecker,
    rank,
    solve,
    transpose,
)
from .monoidal import MonoidalStructure


@dataclass(frozen=True)
class DualityData:
    dual_object: Callable[[int], int]
    evaluation: Callable[[int], RatMatrix]
    coevaluation: Callable[[int], RatMatrix]

    @classmethod
    def of(cls, category: ConcreteCategory) -> DualityData:
        if category.evaluation is None or category.coevaluation is None or category.dual_object is None:
            raise NoDual(f"{category.tag} carries no duality data")
        return cls(category.dual_object, category.evaluation, category.coevaluation)


@dataclass(frozen=True)
class PivotTwistData:
    pivot: Callable[[int], RatMatrix]
    twist: Callable[[int], RatMatrix]

    @classmethod
    def of(cls, category: ConcreteCategory) -> PivotTwistData:
        if category.pivot is None or category.twist is None:
            raise NoDual(f"{category.tag} carries no pivot/twist data")
        return cls(category.pivot, category.twist)


def ambient_snake_verdicts(category: ConcreteCategory, n: int) -> list[Verdict]:
    """Both zig-zags for the object ``n`` of the ambient category."""
    D = DualityData.of(category)
    c = category
    ns = D.dual_object(n)
    first = compose(c.right_unitor(n), compose(
        kronecker(identity(n), D.evaluation(n)),
        compose(c.associator(n, ns, n), compose(kronecker(D.coevaluation(n), identity(n)),
                                                invert(c.left_unitor(n))))))
    second = compose(c.left_unitor(ns), compose(
        kronecker(D.evaluation(n), identity(ns)),
        compose(invert(c.associator(ns, n, ns)), compose(kronecker(identity(ns), D.coevaluation(n)),
                                                         invert(c.right_unitor(ns))))))
    return [Verdict(f"snake {n}", first == identity(n), None if first == identity(n) else "b_A / d_A"),
            Verdict(f"snake {n}*", second == identity(ns), None if second == identity(ns) else "d_A / b_A")]


def has_dual(f: ArrowObject) -> bool:
    return f.src == f.dst and is_invertible(f.map)


def dual_map(f: RatMatrix) -> RatMatrix:
    """The inverse transpose."""
    return transpose(invert(f))


def dual_solvability_oracle(f: ArrowObject, category: ConcreteCategory = MAT_Q) -> RatMatrix | None:
    """Solve ``d_B . (X (x) f) = d_A`` and ``(f (x) X) . b_A = b_B`` for ``X``.

    Each entry of ``X`` is an unknown; both constraints are linear in ``X``,
    so the system is assembled column by column from the images of the
    matrix units. Returns the solution, or ``None`` when inconsistent (or,
    which does not happen in the matrix categories, not unique).
    """
    D = DualityData.of(category)
    A, B = f.src, f.dst
    As, Bs = D.dual_object(A), D.dual_object(B)
    dA, dB, bA, bB = D.evaluation(A), D.evaluation(B), D.coevaluation(A), D.coevaluation(B)
    nvars = Bs * As
    columns = []
    for k in range(nvars):
        unit = [0] * nvars
        unit[k] = 1
        E = RatMatrix(Bs, As, unit)
        lhs1 = compose(dB, kronecker(E, f.map))
        lhs2 = compose(kronecker(f.map, E), bA)
        columns.append(lhs1.entries + lhs2.entries)
    rhs = dA.entries + bB.entries
    neq = len(rhs)
    system = RatMatrix(neq, nvars, [columns[j][i] for i in range(neq) for j in range(nvars)])
    x = solve(system, RatMatrix(neq, 1, rhs))
    if x is None:
        return None
    if rank(system) < nvars:
        return None
    return RatMatrix(Bs, As, x.entries)


@dataclass(frozen=True)
class ArrowDual:
    base: ArrowObject
    dual: ArrowObject
    eval: ArrowMorphism
    coeval: ArrowMorphism


@lru_cache(maxsize=4096)
def make_arrow_dual(f: ArrowObject, category: ConcreteCategory = MAT_Q) -> ArrowDual:
    """Dual of an invertible arrow object, with all four defining diagrams checked.

    Results are memoised: pivots and twists ask for the same duals repeatedly.
    """
    if not has_dual(f):
        raise NoDual(f"{f!r} is not invertible, so it has no dual")
    D = DualityData.of(category)
    S = MonoidalStructure(category)
    fs = ArrowObject(D.dual_object(f.src), D.dual_object(f.dst), dual_map(f.map))
    ev = ArrowMorphism(S.tensor(fs, f), S.unit_arrow, D.evaluation(f.src), D.evaluation(f.dst))
    co = ArrowMorphism(S.unit_arrow, S.tensor(f, fs), D.coevaluation(f.src), D.coevaluation(f.dst))
    d = ArrowDual(f, fs, ev, co)
    v = check_snake_arrow(d, S)
    if not v:
        raise NoDual(f"snake identity failed: {v.detail}")
    return d


def inverse_from_duality(f: ArrowObject, category: ConcreteCategory = MAT_Q) -> RatMatrix:
    """``rho_A . (id_A (x) d_B) . a . (id_A (x) f* (x) id_B) . (b_A (x) id_B) . lambda_B^-1``."""
    if not has_dual(f):
        raise NoDual(f"{f!r} is not invertible, so it has no dual")
    D = DualityData.of(category)
    c = category
    A, B = f.src, f.dst
    As, Bs = D.dual_object(A), D.dual_object(B)
    chain = [
        invert(c.left_unitor(B)),
        kronecker(D.coevaluation(A), identity(B)),
        c.associator(A, As, B),
        kron_all(identity(A), dual_map(f.map), identity(B)),
        kronecker(identity(A), D.evaluation(B)),
        c.right_unitor(A),
    ]
    out = chain[0]
    for m in chain[1:]:
        out = compose(m, out)
    return out


def check_snake_arrow(d: ArrowDual, structure: MonoidalStructure | None = None,
                      coeval: Callable[[], ArrowMorphism] | None = None,
                      eval: Callable[[], ArrowMorphism] | None = None) -> Verdict:
    """Both zig-zag identities in ``Arr``.

    ``coeval``/``eval`` replace the stored structure morphisms with thunks;
    the negative controls use this to inject a corrupted component.
    """
    S = structure or MonoidalStructure(MAT_Q)
    t, u = S.tensor, S.unit_arrow
    f, fs = d.base, d.dual
    b = coeval or (lambda: d.coeval)
    e = eval or (lambda: d.eval)

    one = Diagram("snake f")
    one.vertex("f", f)
    one.vertex("If", t(u, f))
    one.vertex("(ff*)f", t(t(f, fs), f))
    one.vertex("f(f*f)", t(f, t(fs, f)))
    one.vertex("fI", t(f, u))
    one.edge("l^-1", "f", "If", lambda: arrow_inverse(S.left_unitor(f)))
    one.edge("b_f(x)id", "If", "(ff*)f", lambda: S.tensor_morphisms(b(), arrow_id(f)))
    one.edge("a", "(ff*)f", "f(f*f)", lambda: S.associator(f, fs, f))
    one.edge("id(x)d_f", "f(f*f)", "fI", lambda: S.tensor_morphisms(arrow_id(f), e()))
    one.edge("r", "fI", "f", lambda: S.right_unitor(f))
    one.edge("id_f", "f", "f", arrow_id(f))
    one.path("l^-1", "b_f(x)id", "a", "id(x)d_f", "r")
    one.path("id_f")

    two = Diagram("snake f*")
    two.vertex("f*", fs)
    two.vertex("f*I", t(fs, u))
    two.vertex("f*(ff*)", t(fs, t(f, fs)))
    two.vertex("(f*f)f*", t(t(fs, f), fs))
    two.vertex("If*", t(u, fs))
    two.edge("r^-1", "f*", "f*I", lambda: arrow_inverse(S.right_unitor(fs)))
    two.edge("id(x)b_f", "f*I", "f*(ff*)", lambda: S.tensor_morphisms(arrow_id(fs), b()))
    two.edge("a^-1", "f*(ff*)", "(f*f)f*", lambda: S.associator_inverse(fs, f, fs))
    two.edge("d_f(x)id", "(f*f)f*", "If*", lambda: S.tensor_morphisms(e(), arrow_id(fs)))
    two.edge("l", "If*", "f*", lambda: S.left_unitor(fs))
    two.edge("id_f*", "f*", "f*", arrow_id(fs))
    two.path("r^-1", "id(x)b_f", "a^-1", "d_f(x)id", "l")
    two.path("id_f*")
    return all_of("snake identities", [check_diagram(one), check_diagram(two)])


# -- duals of morphisms ------------------------------------------------------

def dual_morphism(m: RatMatrix, category: ConcreteCategory = MAT_Q) -> RatMatrix:
    """``m*: B* -> A*`` for ``m: A -> B``, built from cups and caps."""
    D = DualityData.of(category)
    c = category
    A, B = m.cols, m.rows
    As, Bs = D.dual_object(A), D.dual_object(B)
    chain = [
        invert(c.right_unitor(Bs)),
        kronecker(identity(Bs), D.coevaluation(A)),
        invert(c.associator(Bs, A, As)),
        kron_all(identity(Bs), m, identity(As)),
        kronecker(D.evaluation(B), identity(As)),
        c.left_unitor(As),
    ]
    out = chain[0]
    for x in chain[1:]:
        out = compose(x, out)
    return out


def arrow_dual_morphism(phi: ArrowMorphism, category: ConcreteCategory = MAT_Q) -> ArrowMorphism:
    """``phi*: g* -> f*`` for an arrow morphism ``phi: f -> g`` between invertible objects.

    The components are ``(phi_A*, phi_B*)``, each in its own position.
    """
    fd = make_arrow_dual(phi.source, category).dual
    gd = make_arrow_dual(phi.target, category).dual
    return ArrowMorphism(gd, fd, dual_morphism(phi.top, category), dual_morphism(phi.bottom, category))


# -- pivot -------------------------------------------------------------------

def double_dual(f: ArrowObject, category: ConcreteCategory = MAT_Q_CORE) -> ArrowObject:
    return make_arrow_dual(make_arrow_dual(f, category).dual, category).dual


def pivot_arrow(f: ArrowObject, category: ConcreteCategory = MAT_Q_CORE) -> ArrowMorphism:
    P = PivotTwistData.of(category)
    return ArrowMorphism(f, double_dual(f, category), P.pivot(f.src), P.pivot(f.dst))


def check_pivot_naturality(phi: ArrowMorphism, category: ConcreteCategory = MAT_Q_CORE) -> Verdict:
    """``phi** . pi_f == pi_g . phi`` for ``phi: f -> g``."""
    f, g = phi.source, phi.target
    d = Diagram("pivot naturality cube")
    d.vertex("f", f)
    d.vertex("g", g)
    d.vertex("f**", double_dual(f, category))
    d.vertex("g**", double_dual(g, category))
    d.edge("phi", "f", "g", phi)
    d.edge("pi_f", "f", "f**", lambda: pivot_arrow(f, category))
    d.edge("pi_g", "g", "g**", lambda: pivot_arrow(g, category))
    d.edge("phi**", "f**", "g**",
           lambda: arrow_dual_morphism(arrow_dual_morphism(phi, category), category))
    d.path("pi_f", "phi**")
    d.path("phi", "pi_g")
    return check_diagram(d)


def check_pivot_monoidal(f: ArrowObject, g: ArrowObject, category: ConcreteCategory = MAT_Q_CORE) -> Verdict:
    """``pi_{f (x) g} == pi_f (x) pi_g`` and ``pi_{id_I} == id``.

    In the matrix categories ``(f (x) g)**`` and ``f** (x) g**`` are the same
    arrow object, so the comparison needs no canonical iso in between.
    """
    S = MonoidalStructure(category)
    fg = S.tensor(f, g)
    d = Diagram("pivot monoidality")
    d.vertex("fg", fg)
    d.vertex("(fg)**", double_dual(fg, category))
    d.edge("pi_{fg}", "fg", "(fg)**", lambda: pivot_arrow(fg, category))
    d.edge("pi_f(x)pi_g", "fg", "(fg)**",
           lambda: S.tensor_morphisms(pivot_arrow(f, category), pivot_arrow(g, category)))
    d.path("pi_{fg}")
    d.path("pi_f(x)pi_g")
    u = S.unit_arrow
    e = Diagram("pivot at unit")
    e.vertex("I", u)
    e.edge("pi_I", "I", "I", lambda: pivot_arrow(u, category))
    e.edge("id_I", "I", "I", arrow_id(u))
    e.path("pi_I")
    e.path("id_I")
    return all_of("pivot monoidal", [check_diagram(d), check_diagram(e)])


# -- twist -------------------------------------------------------------------

def twist_arrow(f: ArrowObject, category: ConcreteCategory = MAT_Q_CORE) -> ArrowMorphism:
    P = PivotTwistData.of(category)
    return ArrowMorphism(f, f, P.twist(f.src), P.twist(f.dst))


def check_twist_balancing(f: ArrowObject, g: ArrowObject, category: ConcreteCategory = MAT_Q_CORE) -> Verdict:
    """``theta_{fg} == s_{g,f} . s_{f,g} . (theta_f (x) theta_g)``, plus the form with the twists applied last."""
    S = MonoidalStructure(category)
    fg, gf = S.tensor(f, g), S.tensor(g, f)
    d = Diagram("twist balancing")
    d.vertex("fg", fg)
    d.vertex("gf", gf)
    d.edge("theta_{fg}", "fg", "fg", lambda: twist_arrow(fg, category))
    d.edge("theta_f(x)theta_g", "fg", "fg",
           lambda: S.tensor_morphisms(twist_arrow(f, category), twist_arrow(g, category)))
    d.edge("s_{f,g}", "fg", "gf", lambda: S.braiding(f, g))
    d.edge("s_{g,f}", "gf", "fg", lambda: S.braiding(g, f))
    d.path("theta_{fg}")
    d.path("theta_f(x)theta_g", "s_{f,g}", "s_{g,f}")
    d.path("s_{f,g}", "s_{g,f}", "theta_f(x)theta_g")
    return check_diagram(d)


def check_twist_unit(category: ConcreteCategory = MAT_Q_CORE) -> Verdict:
    S = MonoidalStructure(category)
    u = S.unit_arrow
    d = Diagram("twist at unit")
    d.vertex("I", u)
    d.edge("theta_I", "I", "I", lambda: twist_arrow(u, category))
    d.edge("id_I", "I", "I", arrow_id(u))
    d.path("theta_I")
    d.path("id_I")
    return check_diagram(d)


def check_twist_dual(f: ArrowObject, category: ConcreteCategory = MAT_Q_CORE) -> Verdict:
    """``theta_{f*} == (theta_f)*``."""
    fs = make_arrow_dual(f, category).dual
    d = Diagram("twist dual compatibility")
    d.vertex("f*", fs)
    d.edge("theta_{f*}", "f*", "f*", lambda: twist_arrow(fs, category))
    d.edge("(theta_f)*", "f*", "f*", lambda: arrow_dual_morphism(twist_arrow(f, category), category))
    d.path("theta_{f*}")
    d.path("(theta_f)*")
    return check_diagram(d)


def check_twist_naturality(phi: ArrowMorphism, category: ConcreteCategory = MAT_Q_CORE) -> Verdict:
    d = Diagram("twist naturality")
    d.vertex("f", phi.source)
    d.vertex("g", phi.target)
    d.edge("phi", "f", "g", phi)
    d.edge("theta_f", "f", "f", lambda: twist_arrow(phi.source, category))
    d.edge("theta_g", "g", "g", lambda: twist_arrow(phi.target, category))
    d.path("theta_f", "phi")
    d.path("phi", "theta_g")
    return check_diagram(d)


def check_twist_axioms(f: ArrowObject, g: ArrowObject, category: ConcreteCategory = MAT_Q_CORE) -> Verdict:
    try:
        vs = [check_twist_balancing(f, g, category), check_twist_unit(category), check_twist_dual(f, category)]
    except ArrowcatError as exc:
        return Verdict("twist axioms", False, None, None, f"{type(exc).__name__}: {exc}")
    return all_of("twist axioms", vs)
