from fractions import Fraction
import sys

import pytest

import hypothesis.strategies as st
from hypothesis import settings

from arrowcat.exactmat import RatMatrix

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fractions = st.builds(Fraction, st.integers(-6, 6), st.sampled_from([1, 1, 1, 2, 3, 5]))


@st.composite
def matrices(draw, rows=None, cols=None, max_dim=3, elements=small_fractions):
    r = rows if rows is not None else draw(st.integers(1, max_dim))
    c = cols if cols is not None else draw(st.integers(1, max_dim))
    return RatMatrix(r, c, draw(st.lists(elements, min_size=r * c, max_size=r * c)))


def naive_product(a, b):
    """Schoolbook product on Fraction lists, independent of the kernels."""
    A, B = a.tolist(), b.tolist()
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), Fraction(0)) for j in range(len(B[0]))]
            for i in range(len(A))]


def naive_inverse(m):
    """Textbook Gauss-Jordan on Fractions; None if singular."""
    n = m.rows
    rows = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m.tolist())]
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return None
        rows[c], rows[p] = rows[p], rows[c]
        pv = rows[c][c]
        rows[c] = [x / pv for x in rows[c]]
        for i in range(n):
            if i != c and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return [row[n:] for row in rows]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
