"""Instance files: named matrices, groups, algebras, homomorphisms, arrows
and functors in a JSON document.

Rationals are written as strings (``"p/q"`` or ``"n"``) or plain integers.
Anything that refers to another fixture does so by name. The full schema is
described in ``docs/fixtures.md``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .algebra import check_algebra
from .arrow import ArrowObject, FunctorData, conjugation_functor, identity_functor, transpose_functor
from .errors import ArrowcatError, NotInvertible, ParseError, ValidationError
from .exactmat.algebras import FLAGS, AlgebraData, basis_copying_algebra, group_algebra
from .exactmat.categories import CATEGORIES
from .exactmat.groups import GroupHom, GroupPresentation
from .exactmat.matrix import RatMatrix, identity, invert, parse_rational
from .monoidal import doubling_monoidal_functor

SECTIONS = ("matrices", "groups", "algebras", "homs", "arrows", "functors")
FORMAT = "arrowcat-fixtures/1"
ALGEBRA_MAPS = ("mult", "unit", "comult", "counit", "antipode")


@dataclass
class FixtureSet:
    matrices: dict[str, RatMatrix] = field(default_factory=dict)
    groups: dict[str, GroupPresentation] = field(default_factory=dict)
    algebras: dict[str, AlgebraData] = field(default_factory=dict)
    homs: dict[str, GroupHom] = field(default_factory=dict)
    arrows: dict[str, tuple[ArrowObject, str]] = field(default_factory=dict)
    functors: dict[str, FunctorData] = field(default_factory=dict)

    def counts(self) -> dict[str, int]:
        return {s: len(getattr(self, s)) for s in SECTIONS}

    def merged(self, other: FixtureSet) -> FixtureSet:
        out = FixtureSet()
        for s in SECTIONS:
            getattr(out, s).update(getattr(self, s))
            getattr(out, s).update(getattr(other, s))
        return out


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


class _Loader:
    def __init__(self, text: str):
        self.text = text
        self.out = FixtureSet()

    def rational_error(self, value: Any, exc: Exception) -> ParseError:
        line = col = None
        if isinstance(value, str):
            k = self.text.find(json.dumps(value))
            if k >= 0:
                line, col = _position(self.text, k)
        return ParseError(str(exc), line, col)

    def matrix(self, spec: Any, where: str) -> RatMatrix:
        if isinstance(spec, str):
            if spec not in self.out.matrices:
                raise ValidationError(f"{where}: unknown matrix {spec!r}")
            return self.out.matrices[spec]
        if not isinstance(spec, list) or not spec or not all(isinstance(r, list) for r in spec):
            raise ValidationError(f"{where}: a matrix is a non-empty list of rows")
        ncols = len(spec[0])
        if ncols == 0 or any(len(r) != ncols for r in spec):
            raise ValidationError(f"{where}: rows must be non-empty and of equal length")
        entries = []
        for row in spec:
            for x in row:
                try:
                    entries.append(parse_rational(x))
                except ValueError as exc:
                    raise self.rational_error(x, exc) from None
        return RatMatrix(len(spec), ncols, entries)

    def group(self, name: str, spec: Any) -> GroupPresentation:
        table = spec.get("table") if isinstance(spec, dict) else spec
        if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
            raise ValidationError(f"group {name}: expected a multiplication table (list of rows)")
        if any(not isinstance(x, int) or isinstance(x, bool) for r in table for x in r):
            raise ValidationError(f"group {name}: table entries must be element indices")
        if any(len(r) != len(table) for r in table):
            raise ValidationError(f"group {name}: multiplication table is not square")
        try:
            return GroupPresentation.from_table(table, name)
        except ArrowcatError as exc:
            raise ValidationError(f"group {name}: {exc}") from None

    def algebra(self, name: str, spec: Any) -> AlgebraData:
        if not isinstance(spec, dict):
            raise ValidationError(f"algebra {name}: expected an object")
        if "group" in spec:
            g = self.out.groups.get(spec["group"])
            if g is None:
                raise ValidationError(f"algebra {name}: unknown group {spec['group']!r}")
            a = group_algebra(g)
        elif "copy" in spec:
            n = spec["copy"]
            if not isinstance(n, int) or n < 1:
                raise ValidationError(f"algebra {name}: copy dimension must be a positive integer")
            a = basis_copying_algebra(n)
        else:
            n = spec.get("carrier")
            if not isinstance(n, int) or n < 1:
                raise ValidationError(f"algebra {name}: carrier must be a positive integer")
            flags = spec.get("flags", [])
            unknown = set(flags) - FLAGS
            if unknown:
                raise ValidationError(f"algebra {name}: unknown flags {sorted(unknown)}")
            maps = {k: self.matrix(spec[k], f"algebra {name}.{k}") for k in ALGEBRA_MAPS if k in spec}
            try:
                a = AlgebraData(n, flags=frozenset(flags), **maps)
            except ValueError as exc:
                raise ValidationError(f"algebra {name}: {exc}") from None
        a = a.with_maps(name=name)
        try:
            v = check_algebra(a)
        except ValueError as exc:
            raise ValidationError(f"algebra {name}: {exc}") from None
        if not v:
            raise ValidationError(f"algebra {name} violates {v.check} ({v.failing_edge})")
        return a

    def hom(self, name: str, spec: Any) -> GroupHom:
        if not isinstance(spec, dict):
            raise ValidationError(f"hom {name}: expected an object")
        g, h = self.out.groups.get(spec.get("source")), self.out.groups.get(spec.get("target"))
        if g is None or h is None:
            raise ValidationError(f"hom {name}: source and target must name groups")
        try:
            return GroupHom(g, h, tuple(spec.get("images", ())))
        except ArrowcatError as exc:
            raise ValidationError(f"hom {name}: {exc}") from None

    def arrow(self, name: str, spec: Any) -> tuple[ArrowObject, str]:
        if not isinstance(spec, dict) or "map" not in spec:
            raise ValidationError(f"arrow {name}: expected an object with a 'map'")
        tag = spec.get("category", "MatQ")
        cat = CATEGORIES.get(tag)
        if cat is None:
            raise ValidationError(f"arrow {name}: unknown category {tag!r}")
        m = self.matrix(spec["map"], f"arrow {name}")
        try:
            return ArrowObject.of(m, cat), tag
        except ArrowcatError as exc:
            raise ValidationError(f"arrow {name}: {exc}") from None

    def functor(self, name: str, spec: Any) -> FunctorData:
        kind = spec.get("kind") if isinstance(spec, dict) else None
        if kind == "identity":
            return identity_functor()
        if kind == "transpose":
            return transpose_functor()
        if kind == "double":
            return doubling_monoidal_functor().base
        if kind != "conjugation":
            raise ValidationError(f"functor {name}: kind must be identity, transpose, double or conjugation")
        by = spec.get("by", {})
        if not isinstance(by, dict):
            raise ValidationError(f"functor {name}: 'by' maps dimensions to matrices")
        table: dict[int, RatMatrix] = {}
        for key, ref in by.items():
            if not str(key).isdigit():
                raise ValidationError(f"functor {name}: dimension key {key!r} is not a natural number")
            n = int(key)
            m = self.matrix(ref, f"functor {name}[{n}]")
            if m.shape != (n, n):
                raise ValidationError(f"functor {name}: matrix for dimension {n} must be {n}x{n}")
            try:
                invert(m)
            except NotInvertible:
                raise ValidationError(f"functor {name}: conjugating matrix for dimension {n} is singular") from None
            table[n] = m
        return conjugation_functor(lambda n: table.get(n) or identity(n), name)

    def load(self, doc: Any) -> FixtureSet:
        if not isinstance(doc, dict):
            raise ValidationError("top level must be an object")
        fmt = doc.get("format", FORMAT)
        if fmt != FORMAT:
            raise ValidationError(f"unsupported format {fmt!r}")
        unknown = set(doc) - set(SECTIONS) - {"format", "description"}
        if unknown:
            raise ValidationError(f"unknown sections {sorted(unknown)}")
        for s in SECTIONS:
            if not isinstance(doc.get(s, {}), dict):
                raise ValidationError(f"section {s!r} must map names to fixtures")
        out = self.out
        for name, spec in doc.get("matrices", {}).items():
            out.matrices[name] = self.matrix(spec, f"matrix {name}")
        for name, spec in doc.get("groups", {}).items():
            out.groups[name] = self.group(name, spec)
        for name, spec in doc.get("algebras", {}).items():
            out.algebras[name] = self.algebra(name, spec)
        for name, spec in doc.get("homs", {}).items():
            out.homs[name] = self.hom(name, spec)
        for name, spec in doc.get("arrows", {}).items():
            out.arrows[name] = self.arrow(name, spec)
        for name, spec in doc.get("functors", {}).items():
            out.functors[name] = self.functor(name, spec)
        return out


def loads(text: str) -> FixtureSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return _Loader(text).load(doc)


def load_instances(path: str | Path) -> FixtureSet:
    """Parse and validate a fixture file.

    Raises ParseError (with line and column when known) for malformed JSON
    or rationals, and ValidationError naming the violated invariant.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def shipped_fixtures() -> FixtureSet:
    """Groups of order at most 6 with their algebras and homomorphisms."""
    return load_instances(Path(__file__).parent / "data" / "groups.json")
