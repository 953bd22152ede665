from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrowcat.errors import DimensionMismatch, NotInvertible, NotSquare
from arrowcat.exactmat import (
    RatMatrix,
    basis_vector,
    commutation_matrix,
    compose,
    identity,
    invert,
    is_invertible,
    kron_all,
    kronecker,
    parse_rational,
    permutation_matrix,
    rank,
    scalar,
    solve,
    transpose,
    zeros,
)

from conftest import matrices, naive_inverse, naive_product


@pytest.mark.parametrize("text,value", [
    ("6/4", Fraction(3, 2)), ("-2/6", Fraction(-1, 3)), ("7", Fraction(7)), (" 0/5 ", Fraction(0)), (3, Fraction(3)),
])
def test_parse_rational(text, value):
    x = parse_rational(text)
    assert x == value and x.denominator > 0


@pytest.mark.parametrize("bad", ["1/0", "1.5", "a", "", "1/-2", True, 1.5])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_literal_entries_are_canonical():
    m = RatMatrix.from_rows([["1", "1/2"], ["0", "2/4"]])
    assert m.shape == (2, 2)
    assert m.entries == (1, Fraction(1, 2), 0, Fraction(1, 2))
    assert m.to_strings() == [["1", "1/2"], ["0", "1/2"]]
    assert m == RatMatrix(2, 2, [Fraction(2, 2), Fraction(3, 6), 0, Fraction(1, 2)])
    assert hash(m) == hash(RatMatrix(2, 2, ["1", "1/2", "0", "1/2"]))


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        RatMatrix(2, 2, [1, 2, 3])
    with pytest.raises(DimensionMismatch):
        RatMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        compose(identity(2), identity(3))
    with pytest.raises(DimensionMismatch):
        identity(2) + identity(3)


def test_hand_computed_product_and_kronecker():
    a = RatMatrix.from_rows([[1, 2], [3, 4]])
    b = RatMatrix.from_rows([[0, 1], [1, 0]])
    assert compose(a, b) == RatMatrix.from_rows([[2, 1], [4, 3]])
    assert kronecker(a, b) == RatMatrix.from_rows([
        [0, 1, 0, 2], [1, 0, 2, 0], [0, 3, 0, 4], [3, 0, 4, 0]])
    assert kronecker(scalar(Fraction(1, 2)), a) == a * Fraction(1, 2)


def test_hand_computed_inverse():
    m = RatMatrix.from_rows([[2, 1], [5, 3]])
    assert invert(m) == RatMatrix.from_rows([[3, -1], [-5, 2]])
    h = RatMatrix.from_rows([["1", "1/2"], ["0", "1"]])
    assert invert(h) == RatMatrix.from_rows([["1", "-1/2"], ["0", "1"]])
    with pytest.raises(NotInvertible):
        invert(RatMatrix.from_rows([[1, 2], [2, 4]]))
    with pytest.raises(NotSquare):
        invert(zeros(2, 3))


def test_commutation_matrix_index_formula():
    # K_{m,n} sends e_i (x) e_j to e_j (x) e_i: entry (j*m + i, i*n + j) is 1
    for m in range(1, 4):
        for n in range(1, 4):
            K = commutation_matrix(m, n)
            expected = [[0] * (m * n) for _ in range(m * n)]
            for i in range(m):
                for j in range(n):
                    expected[j * m + i][i * n + j] = 1
            assert K == RatMatrix.from_rows(expected)
            assert compose(commutation_matrix(n, m), K) == identity(m * n)


def test_basis_and_permutation():
    assert basis_vector(3, 1) == RatMatrix.from_rows([[0], [1], [0]])
    P = permutation_matrix([2, 0, 1])
    assert compose(P, basis_vector(3, 0)) == basis_vector(3, 2)
    assert P.is_permutation() and invert(P) == transpose(P)


def test_rank_and_solve():
    a = RatMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(a) == 2
    b = RatMatrix.from_rows([[6], [12], [2]])
    x = solve(a, b)
    assert compose(a, x) == b
    assert solve(a, RatMatrix.from_rows([[1], [0], [0]])) is None


@given(matrices(rows=2, cols=3), matrices(rows=3, cols=2))
def test_product_matches_schoolbook(a, b):
    assert compose(a, b).tolist() == naive_product(a, b)


@given(st.integers(1, 4).flatmap(lambda n: matrices(rows=n, cols=n)))
def test_inverse_matches_textbook_elimination(m):
    ref = naive_inverse(m)
    assert is_invertible(m) == (ref is not None)
    if ref is not None:
        inv = invert(m)
        assert inv.tolist() == ref
        assert compose(inv, m) == identity(m.rows)


@given(matrices(rows=2, cols=2), matrices(rows=2, cols=3), matrices(rows=3, cols=1))
def test_composition_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(matrices(rows=2, cols=2), matrices(rows=2, cols=1), matrices(rows=1, cols=2), matrices(rows=2, cols=1))
def test_kronecker_mixed_product(a, b, c, d):
    assert compose(kronecker(a, c), kronecker(b, d)) == kronecker(compose(a, b), compose(c, d))


@given(matrices(), matrices(), matrices())
def test_kronecker_associative(a, b, c):
    assert kron_all(a, b, c) == kronecker(a, kronecker(b, c))


@given(matrices(), matrices())
def test_commutation_swaps_tensor_factors(a, b):
    # K_{p,r} (A (x) B) K_{n,q}... in operator form: K (A (x) B) = (B (x) A) K
    lhs = compose(commutation_matrix(a.rows, b.rows), kronecker(a, b))
    rhs = compose(kronecker(b, a), commutation_matrix(a.cols, b.cols))
    assert lhs == rhs


@given(matrices(), matrices())
def test_transpose_reverses_products(a, b):
    if a.cols != b.rows:
        b = transpose(b) if a.cols == b.cols else identity(a.cols)
    assert transpose(compose(a, b)) == compose(transpose(b), transpose(a))


@given(matrices(), matrices())
def test_addition_and_scaling(a, b):
    if a.shape == b.shape:
        assert (a + b) - b == a
    assert a * 0 == zeros(*a.shape)
    assert (a * Fraction(3, 7)) * Fraction(7, 3) == a
    assert -(-a) == a
