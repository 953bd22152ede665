import io
import json
import subprocess
import sys

import pytest

from arrowcat.cli import UsageError, default_seed, main
from arrowcat.suites import SUITES


def run(*argv, env=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_list_shows_every_suite_with_citation():
    code, out, _ = run("list")
    assert code == 0
    assert out.count("cites: ") == len(SUITES) >= 15
    for name in SUITES:
        assert name in out


def test_run_passes_with_exit_zero():
    code, out, _ = run("run", "dagger", "--samples", "2")
    assert code == 0
    assert out.rstrip().endswith("status: pass")
    assert "PASS  " in out and "XFAIL control/" in out


def test_quiet_hides_expected_lines():
    code, out, _ = run("run", "dagger", "--samples", "2", "-q")
    assert code == 0 and "PASS  " not in out and "totals:" in out


def test_json_output_parses():
    code, out, _ = run("run", "duality", "--samples", "1", "--format", "json")
    rep = json.loads(out)
    assert code == 0 and rep["status"] == "pass" and rep["suite"] == "duality"


def test_out_file(tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = run("run", "arrow-core", "--samples", "1", "--format", "json", "--out", str(target))
    assert code == 0 and str(target) in out
    assert json.loads(target.read_text())["totals"]["violations"] == 0


@pytest.mark.parametrize("argv", [
    ("run", "nonexistent"),
    ("run", "dagger", "--samples", "-1"),
    ("run", "dagger", "--max-dim", "0"),
    ("run", "dagger", "--format", "yaml"),
    ("frobnicate",),
    (),
])
def test_usage_errors_exit_two(argv):
    code, _, _ = run(*argv)
    assert code == 2


def test_bad_fixture_file_exits_two(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"matrices": {"A": [["1", "1/0"]]}}')
    code, _, err = run("run", "duality", "--fixtures", str(bad))
    assert code == 2 and "ParseError" in err and "line 1, column 27" in err
    code, _, err = run("check-file", str(tmp_path / "missing.json"))
    assert code == 2


def test_check_file(tmp_path):
    code, out, _ = run("check-file", "docs/golden/instances.json")
    assert code == 0 and "7 matrices" in out
    bad = tmp_path / "v.json"
    bad.write_text('{"groups": {"G": [[0, 0], [0, 0]]}}')
    code, _, err = run("check-file", str(bad))
    assert code == 2 and "ValidationError" in err


def test_seed_environment_variable(monkeypatch):
    assert default_seed({}) == 0
    assert default_seed({"ARROWCAT_SEED": "17"}) == 17
    with pytest.raises(UsageError):
        default_seed({"ARROWCAT_SEED": "x"})
    monkeypatch.setenv("ARROWCAT_SEED", "9")
    _, out, _ = run("run", "dagger", "--samples", "1", "--format", "json")
    assert json.loads(out)["parameters"]["seed"] == 9
    _, out, _ = run("run", "dagger", "--samples", "1", "--format", "json", "--seed", "4")
    assert json.loads(out)["parameters"]["seed"] == 4
    monkeypatch.setenv("ARROWCAT_SEED", "nope")
    code, _, err = run("run", "dagger")
    assert code == 2 and "ARROWCAT_SEED" in err


def test_violation_exit_code_is_one(monkeypatch):
    import arrowcat.suites as suites

    def broken(r):
        r.check("always-false", 0, lambda: False, "broken")
    monkeypatch.setitem(suites.SUITES, "broken", suites.Suite("broken", "t", "c", broken))
    code, out, _ = run("run", "broken")
    assert code == 1 and "FAIL  always-false" in out and out.rstrip().endswith("status: fail")


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "arrowcat", "list"], capture_output=True, text=True)
    assert p.returncode == 0 and "hopf" in p.stdout
