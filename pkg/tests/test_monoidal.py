import dataclasses

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrowcat.arrow import ArrowObject, arrow_id
from arrowcat.exactmat import MAT_N, MAT_Q, RatMatrix, compose, identity
from arrowcat.exactmat.matrix import commutation_matrix, kronecker
from arrowcat.monoidal import (
    MonoidalStructure,
    braiding_arrow,
    check_braiding_naturality,
    check_hexagon_first,
    check_hexagon_second,
    check_interchange,
    check_monoidal_functor_associativity,
    check_monoidal_functor_unitality,
    check_pentagon,
    check_symmetry,
    check_triangle,
    conjugation_monoidal_functor,
    doubling_monoidal_functor,
    identity_monoidal_functor,
    lift_monoidal_functor,
    monoidal_functor_verdicts,
)
from arrowcat.sampling import Sampler

seeds = st.integers(0, 10**6)
SQ = MonoidalStructure(MAT_Q)


def test_tensor_of_arrows_by_hand():
    f = ArrowObject.of(RatMatrix.from_rows([[1, 2]]))
    g = ArrowObject.of(RatMatrix.from_rows([[0], [3]]))
    fg = SQ.tensor(f, g)
    assert (fg.src, fg.dst) == (2, 2)
    assert fg.map == RatMatrix.from_rows([[0, 0], [3, 6]])
    assert SQ.unit_arrow.map == identity(1)


def test_braiding_components_are_commutation_matrices():
    f = ArrowObject.of(RatMatrix.from_rows([[1, 2, 3]]))
    g = ArrowObject.of(RatMatrix.from_rows([[1, 0], [1, 1]]))
    b = braiding_arrow(f, g)
    assert b.top == commutation_matrix(3, 2)
    assert b.bottom == commutation_matrix(1, 2)
    assert b.source == SQ.tensor(f, g) and b.target == SQ.tensor(g, f)


@pytest.mark.parametrize("cat", [MAT_Q, MAT_N], ids=lambda c: c.tag)
@given(seed=seeds)
def test_coherence_holds(cat, seed):
    S = MonoidalStructure(cat)
    s = Sampler(cat, seed, 3)
    f1, f2, f3, f4 = (s.arrow_object() for _ in range(4))
    assert check_pentagon(S, f1, f2, f3, f4)
    assert check_triangle(S, f1, f2)
    assert check_hexagon_first(S, f1, f2, f3)
    assert check_hexagon_second(S, f1, f2, f3)
    assert check_symmetry(S, f1, f2)
    assert check_braiding_naturality(S, s.square(), s.square())
    phi, phi2 = s.composable(2)
    psi, psi2 = s.composable(2)
    assert check_interchange(S, phi, phi2, psi, psi2)


def corrupt(**kw):
    return MonoidalStructure(dataclasses.replace(MAT_Q, **kw))


def test_scaled_associator_breaks_pentagon():
    s = Sampler(MAT_Q, 1, 3)
    fs = [s.arrow_object() for _ in range(4)]
    v = check_pentagon(corrupt(associator=lambda a, b, c: identity(a * b * c) * 2), *fs)
    assert not v and v.witness is not None


def test_scaled_unitor_breaks_triangle():
    f, g = ArrowObject.of(identity(2)), ArrowObject.of(identity(3))
    assert not check_triangle(corrupt(right_unitor=lambda n: identity(n) * 2), f, g)


def test_identity_braiding_breaks_hexagons_and_square():
    f = ArrowObject.of(RatMatrix.from_rows([[1, 1], [0, 1]]))
    g = ArrowObject.of(RatMatrix.from_rows([[2, 0], [0, 1]]))
    S = corrupt(braiding=lambda a, b: identity(a * b))
    assert not check_hexagon_first(S, f, g, f)
    assert not check_hexagon_second(S, f, g, f)
    with pytest.raises(Exception):
        braiding_arrow(f, g, S)


def test_scaled_braiding_breaks_symmetry():
    f = ArrowObject.of(identity(2))
    assert not check_symmetry(corrupt(braiding=lambda a, b: commutation_matrix(a, b) * 2), f, f)


def test_doubling_functor_values():
    D = doubling_monoidal_functor()
    M = RatMatrix.from_rows([[1, 2]])
    assert D.base.obj(3) == 6
    assert D.base(M) == RatMatrix.from_rows([[1, 0, 2, 0], [0, 1, 0, 2]])
    # copying product on Q^2 merges equal basis vectors
    assert D.F2(1, 1) == RatMatrix.from_rows([[1, 0, 0, 0], [0, 0, 0, 1]])
    assert D.F0 == RatMatrix.from_rows([[1], [1]])


@pytest.mark.parametrize("Fm", [
    identity_monoidal_functor(),
    doubling_monoidal_functor(),
    conjugation_monoidal_functor(
        {1: identity(1), 2: RatMatrix.from_rows([[1, 1], [0, 1]]), 3: identity(3) * 3,
         4: RatMatrix.from_rows([[1, 0, 0, 0], [0, 2, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1]])}.__getitem__),
], ids=lambda F: F.name)
def test_monoidal_functor_axioms_and_lift(Fm):
    s = Sampler(MAT_Q, 4, 2)
    objs = [(a, b, c) for a in (1, 2) for b in (1, 2) for c in (1,)]
    mors = [(s.morphism(s.dim(), s.dim()), s.morphism(s.dim(), s.dim())) for _ in range(5)]
    assert all(monoidal_functor_verdicts(Fm, MAT_Q, objs, mors, braided=True))
    L = lift_monoidal_functor(Fm, SQ, objs, mors)
    for _ in range(5):
        f, g, h = s.arrow_object(), s.arrow_object(), s.arrow_object(1, 1)
        assert check_monoidal_functor_associativity(L, f, g, h)
        assert check_monoidal_functor_unitality(L, f)


def test_broken_F0_is_caught():
    D = doubling_monoidal_functor()
    bad = dataclasses.replace(D, F0=D.F0 * 2)
    assert not all(monoidal_functor_verdicts(bad, MAT_Q, [(1, 2, 1)], []))


def test_kronecker_swap_identity():
    x = RatMatrix.from_rows([[1], [2]])
    y = RatMatrix.from_rows([[3], [4], [5]])
    assert compose(commutation_matrix(2, 3), kronecker(x, y)) == kronecker(y, x)
    assert arrow_id(SQ.unit_arrow).top == identity(1)
