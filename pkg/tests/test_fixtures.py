import json
from pathlib import Path

import pytest

from arrowcat.errors import ParseError, ValidationError
from arrowcat.exactmat import RatMatrix
from arrowcat.fixtures import SECTIONS, load_instances, loads, shipped_fixtures

GOLDEN = Path(__file__).resolve().parent.parent / "docs" / "golden" / "instances.json"


def doc(**sections):
    return json.dumps({"format": "arrowcat-fixtures/1", **sections}, indent=2)


def test_golden_instances_load():
    fx = load_instances(GOLDEN)
    assert fx.counts() == {"matrices": 7, "groups": 3, "algebras": 4, "homs": 2, "arrows": 4, "functors": 2}
    assert fx.matrices["M"] == RatMatrix.from_rows([[1, "1/2"], [0, 1]])
    assert fx.arrows["rotation"][1] == "MatQUnitary"
    assert fx.homs["project_V4_C2"].images == (0, 1, 0, 1)
    assert fx.algebras["Diag2"].has("special")
    F = fx.functors["ConjM"]
    M = fx.matrices["M"]
    assert F(M) == M  # conjugating M by itself
    assert F.obj(3) == 3


def test_shipped_fixtures():
    fx = shipped_fixtures()
    assert set(fx.groups) == {"Z2", "Z3", "Z4", "Z2xZ2", "Z5", "S3", "Z6"}
    assert {"Q[S3]", "Copy(1)", "Copy(5)"} <= set(fx.algebras)
    assert fx.homs["sign_S3_Z2"].target.order == 2


def test_merge_prefers_the_later_set():
    a = loads(doc(matrices={"X": [[1]]}))
    b = loads(doc(matrices={"X": [[2]], "Y": [[3]]}))
    m = a.merged(b)
    assert m.matrices["X"] == RatMatrix.from_rows([[2]]) and set(m.matrices) == {"X", "Y"}


def test_bad_json_reports_position():
    with pytest.raises(ParseError) as e:
        loads('{\n  "matrices": {\n    "A": [[1, 2]\n  }\n}')
    assert e.value.line == 4 and e.value.column is not None


def test_bad_rational_reports_position():
    text = doc(matrices={"A": [["1", "1/0"]]})
    with pytest.raises(ParseError) as e:
        loads(text)
    line, col = e.value.line, e.value.column
    assert text.splitlines()[line - 1][col - 1:].startswith('"1/0"')


@pytest.mark.parametrize("entry", [1.5, "abc", True, None, "1/2/3"])
def test_non_rational_entries_are_rejected(entry):
    with pytest.raises((ParseError, ValidationError)):
        loads(doc(matrices={"A": [[entry]]}))


@pytest.mark.parametrize("sections, needle", [
    ({"matrices": {"A": [[1, 2], [3]]}}, "equal length"),
    ({"matrices": {"A": []}}, "non-empty"),
    ({"groups": {"G": [[0, 1], [1, 1]]}}, "group G"),
    ({"groups": {"G": [[0, 1, 2], [1, 2, 0]]}}, "not square"),
    ({"algebras": {"A": {"group": "nope"}}}, "unknown group"),
    ({"algebras": {"A": {"copy": 0}}}, "positive"),
    ({"algebras": {"A": {"carrier": 1, "mult": [[1]], "flags": ["monoid"]}}}, "algebra A"),
    ({"algebras": {"A": {"carrier": 1, "mult": [[2]], "unit": [[1]], "flags": ["monoid"]}}}, "violates"),
    ({"algebras": {"A": {"carrier": 1, "flags": ["wizard"]}}}, "unknown flags"),
    ({"groups": {"G": [[0, 1], [1, 0]]}, "homs": {"h": {"source": "G", "target": "G", "images": [1, 1]}}}, "hom h"),
    ({"homs": {"h": {"source": "G", "target": "G", "images": []}}}, "must name groups"),
    ({"arrows": {"a": {"map": [[1, -1]], "category": "MatN"}}}, "arrow a"),
    ({"arrows": {"a": {"map": [[1]], "category": "Sets"}}}, "unknown category"),
    ({"arrows": {"a": {"map": "missing"}}}, "unknown matrix"),
    ({"functors": {"F": {"kind": "mystery"}}}, "kind must be"),
    ({"functors": {"F": {"kind": "conjugation", "by": {"2": [[1, 1], [1, 1]]}}}}, "singular"),
    ({"functors": {"F": {"kind": "conjugation", "by": {"2": [[1]]}}}}, "must be 2x2"),
    ({"surprise": {}}, "unknown sections"),
    ({"format": "other/2"}, "unsupported format"),
    ({"matrices": []}, "must map names"),
])
def test_invariant_violations(sections, needle):
    text = json.dumps({"format": "arrowcat-fixtures/1", **sections})
    with pytest.raises(ValidationError, match=needle):
        loads(text)


def test_top_level_must_be_object():
    with pytest.raises(ValidationError):
        loads("[]")


def test_missing_file_is_a_parse_error(tmp_path):
    with pytest.raises(ParseError, match="cannot read"):
        load_instances(tmp_path / "absent.json")


def test_sections_constant():
    assert SECTIONS == ("matrices", "groups", "algebras", "homs", "arrows", "functors")
