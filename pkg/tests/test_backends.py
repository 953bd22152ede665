import json
import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrowcat.exactmat import BACKEND, _pykernels

ck = pytest.importorskip("arrowcat.exactmat._ckernels")


@st.composite
def sparse_rows(draw, rows, cols):
    out = []
    for _ in range(rows):
        vals = draw(st.lists(st.integers(-10**6, 10**6), min_size=cols, max_size=cols))
        out.append(tuple((j, x) for j, x in enumerate(vals) if x))
    return tuple(out)


@st.composite
def sparse_pair(draw):
    r, k, c = (draw(st.integers(1, 5)) for _ in range(3))
    return draw(sparse_rows(r, k)), draw(sparse_rows(k, c)), c


@given(sparse_pair())
def test_matmul_agrees(case):
    a, b, _ = case
    assert ck.matmul(a, b) == _pykernels.matmul(a, b)


@given(sparse_pair())
def test_kron_agrees(case):
    a, b, bc = case
    assert ck.kron(a, b, bc) == _pykernels.kron(a, b, bc)


@given(st.integers(1, 5), st.integers(1, 6), st.data())
def test_gauss_jordan_agrees(nrows, ncols, data):
    rows = [data.draw(st.lists(st.integers(-50, 50), min_size=ncols, max_size=ncols)) for _ in range(nrows)]
    pivot_cols = data.draw(st.integers(0, ncols))
    r1, r2 = [list(r) for r in rows], [list(r) for r in rows]
    assert ck.gauss_jordan(r1, pivot_cols) == _pykernels.gauss_jordan(r2, pivot_cols)
    assert r1 == r2


@given(st.integers(1, 4).flatmap(lambda n: sparse_rows(n, n)), st.integers(1, 10**9))
def test_content_agrees(rows, g):
    assert ck.content(rows, g) == _pykernels.content(rows, g)


def test_backend_selection_follows_environment():
    assert BACKEND == ("python" if os.environ.get("ARROWCAT_PURE_PYTHON") else "cython")


SCRIPT = """
import json
from arrowcat.exactmat import BACKEND, RatMatrix, invert, kronecker, compose
from arrowcat.suites import run_suite
m = RatMatrix.from_rows([["2", "1/3", "0"], ["1", "1", "-1"], ["0", "5/2", "4"]])
r = run_suite("monoidal-coherence", samples=3)
print(json.dumps({"backend": BACKEND, "inv": invert(m).to_strings(),
                  "kron": compose(kronecker(m, m), kronecker(m, m)).to_strings(), "report": r.to_json()}))
"""


def _run(pure):
    env = {k: v for k, v in os.environ.items() if k != "ARROWCAT_PURE_PYTHON"}
    if pure:
        env["ARROWCAT_PURE_PYTHON"] = "1"
    out = subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def test_pure_python_fallback_gives_identical_results():
    py, cy = _run(True), _run(False)
    assert py["backend"] == "python" and cy["backend"] == "cython"
    assert py["inv"] == cy["inv"] and py["kron"] == cy["kron"]
    assert py["report"] == cy["report"]
