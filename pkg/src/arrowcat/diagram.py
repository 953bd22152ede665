"""Commuting-diagram engine.

A :class:`Diagram` names its vertices and edges and lists the paths that
must agree. :func:`check_diagram` composes each path exactly and compares
it with the first one. Edges can be given lazily as zero-argument callables;
if building one raises (typically :class:`SquareBroken`), the verdict fails
and names that edge.

Morphisms are either :class:`RatMatrix` (ambient diagrams) or arrow-category
morphisms; anything with ``source``/``target`` attributes and ``@`` for
composition works.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .errors import ArrowcatError, NotComposable
from .exactmat.matrix import RatMatrix, format_rational

WITNESS_FULL_LIMIT = 16


@dataclass
class Verdict:
    check: str
    passed: bool
    failing_edge: str | None = None
    witness: dict | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.passed

    @classmethod
    def ok(cls, check: str) -> Verdict:
        return cls(check, True)


def all_of(check: str, verdicts) -> Verdict:
    """First failing verdict (renamed under ``check``), or a pass."""
    for v in verdicts:
        if not v.passed:
            return Verdict(check, False, v.failing_edge or v.check, v.witness,
                           f"{v.check}: {v.detail}" if v.detail else v.check)
    return Verdict.ok(check)


def endpoints(m) -> tuple[Any, Any]:
    if isinstance(m, RatMatrix):
        return (m.cols, m.rows)
    return (m.source, m.target)


@dataclass
class _Edge:
    name: str
    src: str
    dst: str
    morphism: Any


@dataclass
class Diagram:
    name: str
    vertices: dict[str, Any] = field(default_factory=dict)
    edges: dict[str, _Edge] = field(default_factory=dict)
    paths: list[tuple[str, ...]] = field(default_factory=list)

    def vertex(self, name: str, obj: Any) -> str:
        self.vertices[name] = obj
        return name

    def edge(self, name: str, src: str, dst: str, morphism: Any | Callable[[], Any]) -> str:
        if name in self.edges:
            raise ValueError(f"duplicate edge {name!r}")
        self.edges[name] = _Edge(name, src, dst, morphism)
        return name

    def path(self, *edge_names: str) -> None:
        """Add a path; edges are listed in the order they are applied."""
        if not edge_names:
            raise ValueError("a path needs at least one edge")
        self.paths.append(tuple(edge_names))


def _matrix_witness(a: RatMatrix, b: RatMatrix) -> dict:
    w: dict = {"shape": [a.rows, a.cols]}
    if a.shape != b.shape:
        w["other_shape"] = [b.rows, b.cols]
        return w
    ea, eb = a.entries, b.entries
    k = next(i for i, (x, y) in enumerate(zip(ea, eb)) if x != y)
    w["index"] = [k // a.cols, k % a.cols]
    w["left"] = format_rational(ea[k])
    w["right"] = format_rational(eb[k])
    if a.rows * a.cols <= WITNESS_FULL_LIMIT:
        w["left_matrix"] = a.to_strings()
        w["right_matrix"] = b.to_strings()
    return w


def compare(a, b) -> tuple[str | None, dict | None]:
    """``(None, None)`` if equal, else the differing component and a witness."""
    if isinstance(a, RatMatrix):
        if a == b:
            return None, None
        return "matrix", _matrix_witness(a, b)
    for comp in ("top", "bottom"):
        x, y = getattr(a, comp), getattr(b, comp)
        if x != y:
            return comp, _matrix_witness(x, y)
    return None, None


def check_diagram(d: Diagram) -> Verdict:
    built: dict[str, Any] = {}
    for e in d.edges.values():
        m = e.morphism
        if callable(m) and not isinstance(m, RatMatrix) and not hasattr(m, "top"):
            try:
                m = m()
            except NotComposable:
                raise
            except ArrowcatError as exc:
                return Verdict(d.name, False, e.name, None, f"{type(exc).__name__}: {exc}")
        built[e.name] = m
        if d.vertices:
            for v in (e.src, e.dst):
                if v not in d.vertices:
                    raise NotComposable(f"{d.name}: edge {e.name!r} uses unknown vertex {v!r}")
            if endpoints(m) != (d.vertices[e.src], d.vertices[e.dst]):
                raise NotComposable(f"{d.name}: edge {e.name!r} does not run {e.src} -> {e.dst}")

    ends = None
    for p in d.paths:
        for a, b in zip(p, p[1:]):
            if d.edges[a].dst != d.edges[b].src:
                raise NotComposable(f"{d.name}: edges {a!r} then {b!r} are not composable")
        pe = (d.edges[p[0]].src, d.edges[p[-1]].dst)
        if ends is None:
            ends = pe
        elif pe != ends:
            raise NotComposable(f"{d.name}: path {' ; '.join(p)} has endpoints {pe}, expected {ends}")

    values = []
    for p in d.paths:
        acc = built[p[0]]
        for name in p[1:]:
            acc = built[name] @ acc
        values.append(acc)
    for i in range(1, len(values)):
        comp, witness = compare(values[0], values[i])
        if comp is not None:
            edge = f"{' ; '.join(d.paths[0])} != {' ; '.join(d.paths[i])} [{comp}]"
            return Verdict(d.name, False, edge, witness, "paths disagree")
    return Verdict.ok(d.name)
