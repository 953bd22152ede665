import dataclasses
import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrowcat.arrow import ArrowMorphism, ArrowObject, arrow_id
from arrowcat.duality import (
    ambient_snake_verdicts,
    arrow_dual_morphism,
    check_pivot_monoidal,
    check_pivot_naturality,
    check_snake_arrow,
    check_twist_axioms,
    check_twist_balancing,
    check_twist_unit,
    double_dual,
    dual_map,
    dual_morphism,
    dual_solvability_oracle,
    has_dual,
    inverse_from_duality,
    make_arrow_dual,
    pivot_arrow,
)
from arrowcat.errors import NoDual
from arrowcat.exactmat import MAT_Q, MAT_Q_CORE, RatMatrix, identity, invert, transpose
from arrowcat.exactmat.matrix import is_invertible
from arrowcat.monoidal import MonoidalStructure
from arrowcat.sampling import Sampler

seeds = st.integers(0, 10**6)
SHEAR = ArrowObject.of(RatMatrix.from_rows([[1, 2], [0, 1]]))


def test_dual_of_shear_by_hand():
    d = make_arrow_dual(SHEAR)
    assert d.dual.map == RatMatrix.from_rows([[1, 0], [-2, 1]])
    assert d.eval.top == RatMatrix.from_rows([[1, 0, 0, 1]])
    assert d.coeval.bottom == RatMatrix.from_rows([[1], [0], [0], [1]])
    assert dual_solvability_oracle(SHEAR) == d.dual.map


@pytest.mark.parametrize("bits", list(itertools.product((0, 1), repeat=4)), ids=lambda b: "".join(map(str, b)))
def test_zero_one_sweep(bits):
    m = RatMatrix(2, 2, list(bits))
    f = ArrowObject.of(m)
    inv = is_invertible(m)
    assert has_dual(f) == inv
    oracle = dual_solvability_oracle(f)
    assert (oracle is not None) == inv
    if inv:
        assert oracle == dual_map(m)
    else:
        with pytest.raises(NoDual):
            make_arrow_dual(f)


def test_sweep_has_six_invertible_cases():
    assert sum(is_invertible(RatMatrix(2, 2, list(b))) for b in itertools.product((0, 1), repeat=4)) == 6


def test_rectangular_has_no_dual():
    f = ArrowObject.of(RatMatrix.from_rows([[1, 0, 0], [0, 1, 0]]))
    assert not has_dual(f)
    assert dual_solvability_oracle(f) is None
    with pytest.raises(NoDual):
        inverse_from_duality(f)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ambient_snakes(n):
    assert all(ambient_snake_verdicts(MAT_Q, n))


@given(seeds)
def test_snakes_and_inverse_on_invertible_samples(seed):
    f = Sampler(MAT_Q_CORE, seed, 3).arrow_object()
    d = make_arrow_dual(f)
    assert check_snake_arrow(d)
    assert inverse_from_duality(f) == invert(f.map)
    assert d.dual.map == transpose(invert(f.map))


@given(seeds)
def test_dual_morphism_is_transpose(seed):
    s = Sampler(MAT_Q, seed, 3)
    m = s.morphism(s.dim(), s.dim())
    assert dual_morphism(m) == transpose(m)


def test_arrow_dual_morphism_reverses_direction():
    phi = Sampler(MAT_Q_CORE, 3, 3).iso_square(SHEAR)
    ps = arrow_dual_morphism(phi)
    assert ps.source == make_arrow_dual(phi.target).dual
    assert ps.target == make_arrow_dual(SHEAR).dual
    assert ps.top == transpose(phi.top)


def test_corrupted_coevaluation_breaks_snake():
    d = make_arrow_dual(SHEAR)
    S = MonoidalStructure(MAT_Q)
    bad = ArrowMorphism(S.unit_arrow, S.tensor(d.base, d.dual), d.coeval.top * 2, d.coeval.bottom * 2)
    v = check_snake_arrow(d, coeval=lambda: bad)
    assert not v and v.failing_edge


def test_double_dual_and_pivot_are_trivial_in_mat():
    assert double_dual(SHEAR) == SHEAR
    assert pivot_arrow(SHEAR) == arrow_id(SHEAR)


@given(seeds)
def test_pivot_and_twist_laws(seed):
    s = Sampler(MAT_Q_CORE, seed, 3)
    f, g = s.arrow_object(), s.arrow_object()
    assert check_pivot_naturality(s.square(f))
    assert check_pivot_monoidal(f, g)
    assert check_twist_axioms(f, g)


def test_pivot_and_twist_controls():
    g = ArrowObject.of(identity(2) * 3)
    scaled = dataclasses.replace(MAT_Q_CORE, pivot=lambda n: identity(n) * 2)
    assert not check_pivot_monoidal(SHEAR, g, scaled)
    diag = dataclasses.replace(MAT_Q_CORE, twist=lambda n: RatMatrix(n, n, [i + 1 if i == j else 0
                                                                             for i in range(n) for j in range(n)]))
    assert not check_twist_balancing(SHEAR, g, diag)
    assert not check_twist_unit(dataclasses.replace(MAT_Q_CORE, twist=lambda n: identity(n) * 2))
