"""Acceptance criteria, one test each.

Every test appends a single ``criterion N: PASS|FAIL ...`` line; the lines are
printed in the pytest terminal summary (see ``conftest.py``) and also
immediately with ``-s``.
"""

import itertools
import json
import math
import time
from collections import Counter

import pytest

from arrowcat.cli import main
from arrowcat.exactmat import MAT_Q_UNITARY
from arrowcat.exactmat.groups import homomorphisms, standard_groups
from arrowcat.sampling import Sampler
from arrowcat.suites import SUITES, run_suite

RESULTS: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    n = request.node.get_closest_marker("criterion").args[0]
    facts: list[str] = []
    yield facts
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    line = f"criterion {n}: {'FAIL' if failed else 'PASS'}  {'; '.join(facts)}"
    RESULTS[n] = line
    print(line)


def timed(name, **kw):
    t = time.perf_counter()
    rep = run_suite(name, **kw)
    return rep, time.perf_counter() - t


def ids_with(rep, prefix):
    return [r for r in rep.records if r.check_id.startswith(prefix)]


def all_ok(records):
    return all(r.ok for r in records)


@pytest.mark.criterion(1)
def test_arrow_core_200_squares(criterion):
    rep, dt = timed("arrow-core", samples=200, max_dim=3)
    chains = ids_with(rep, "associativity/")
    criterion += [f"{len(chains)} composable triples", f"{dt:.2f}s"]
    assert len(chains) == 200
    for prefix in ("square/", "composite/", "associativity/", "left-identity/", "right-identity/"):
        assert len(ids_with(rep, prefix)) == 200 and all_ok(ids_with(rep, prefix))
    assert rep.passed and dt < 5


@pytest.mark.criterion(2)
def test_monoidal_coherence(criterion):
    rep, dt = timed("monoidal-coherence")
    assert rep.max_dim == 4 and rep.samples == 50
    counts = Counter(r.check_id.split("/")[0] for r in rep.records if r.expect == "pass")
    for law in ("pentagon", "triangle", "hexagon-1", "hexagon-2", "interchange", "symmetry"):
        assert counts[law] >= 50, law
    controls = [r for r in rep.records if r.expect == "fail"]
    criterion += [f"{sum(counts.values())} law checks", f"{len(controls)} controls failed", f"{dt:.2f}s"]
    assert controls and all(r.verdict == "fail" for r in controls)
    assert rep.passed and dt < 30


@pytest.mark.criterion(3)
def test_duality(criterion):
    rep, _ = timed("duality")
    sweep = ids_with(rep, "sweep/")
    assert sorted(r.check_id[6:] for r in sweep) == ["".join(b) for b in itertools.product("01", repeat=4)]
    for prefix in ("snake/", "inverse/", "oracle/", "singular/"):
        assert len(ids_with(rep, prefix)) == 50 and all_ok(ids_with(rep, prefix)), prefix
    criterion += ["16-case sweep", "50 invertible", "50 non-invertible"]
    assert all_ok(sweep) and rep.passed


@pytest.mark.criterion(4)
def test_pivot_ribbon(criterion):
    rep, dt = timed("pivot-ribbon")
    for prefix in ("pivot-naturality/", "pivot-monoidal/", "twist-balancing/", "twist-dual/",
                   "twist-naturality/", "twist-identity/"):
        assert len(ids_with(rep, prefix)) == 50 and all_ok(ids_with(rep, prefix)), prefix
    assert all_ok(ids_with(rep, "twist-unit"))
    criterion += ["50 fixtures x 6 laws + twist unit", f"{dt:.2f}s"]
    assert rep.passed


@pytest.mark.criterion(5)
def test_algebra_suites(criterion):
    t0 = time.perf_counter()
    reps = {n: run_suite(n) for n in ("monoid", "bialgebra", "frobenius", "dagger-frobenius", "hopf")}
    dt = time.perf_counter() - t0
    groups = standard_groups()
    assert max(g.order for g in groups.values()) <= 6
    hopf = reps["hopf"]
    assert {r.check_id for r in ids_with(hopf, "ambient/")} >= {f"ambient/Q[{n}]" for n in groups}
    n_homs = sum(len(homomorphisms(g, h)) for g, h in itertools.product(groups.values(), repeat=2))
    arr = [r for r in ids_with(hopf, "arr/") if "#" in r.check_id]
    assert len(arr) == n_homs and all_ok(arr)
    n_perm = sum(math.factorial(d) for d in range(1, 6))
    assert len(ids_with(reps["frobenius"], "arr/")) == n_perm
    assert len(ids_with(reps["dagger-frobenius"], "arr/")) == n_perm
    assert {f"ambient/Copy({d})" for d in range(1, 6)} <= {r.check_id for r in reps["frobenius"].records}
    z2 = [r for r in reps["frobenius"].records if r.check_id == "control/group-algebra/Q[Z2]"]
    assert z2 and z2[0].verdict == "fail"
    criterion += [f"{n_homs} group homs", f"{n_perm} permutations", "Q[Z2] not Frobenius", f"{dt:.2f}s"]
    assert all(r.passed for r in reps.values()) and dt < 60


@pytest.mark.criterion(6)
def test_dagger(criterion):
    rep, _ = timed("dagger")
    inv = ids_with(rep, "involutive/")
    con = ids_with(rep, "contravariant/")
    # the suite's samplers at seed 0 draw from fixture seeds 0..49
    kinds = set()
    for k in range(50):
        for sq in Sampler(MAT_Q_UNITARY, k, 3).composable(2):
            for m in (sq.top, sq.bottom):
                kinds.add("rotation" if any(x.denominator != 1 for x in m.entries) else "permutation")
    assert kinds == {"rotation", "permutation"}
    criterion += [f"{len(inv)} unitary squares", f"{len(con)} composable pairs", "permutations and rotations"]
    assert len(inv) == 100 and all_ok(inv) and all_ok(con) and rep.passed


@pytest.mark.criterion(7)
def test_determinism(criterion, tmp_path):
    outs = []
    for name in SUITES:
        a = run_suite(name, seed=5, samples=3).to_json()
        b = run_suite(name, seed=5, samples=3).to_json()
        assert a == b, name
        outs.append(a)
    # and through the CLI, to files
    paths = [tmp_path / f"{k}.json" for k in range(2)]
    for p in paths:
        assert main(["run", "monoidal-coherence", "--samples", "5", "--format", "json", "--out", str(p)],
                    out=open(tmp_path / "log", "w")) == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()
    json.loads(paths[0].read_text())
    criterion += [f"{len(outs)} suites byte-identical"]


@pytest.mark.criterion(8)
def test_list_coverage(criterion, capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    cites = [line for line in out.splitlines() if line.strip().startswith("cites: ")]
    criterion += [f"{len(SUITES)} suites listed with citations"]
    assert len(SUITES) >= 15 and len(cites) == len(SUITES)
    assert all(len(c.strip()) > len("cites: ") for c in cites)
