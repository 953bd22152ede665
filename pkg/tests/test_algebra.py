from fractions import Fraction

import pytest

from arrowcat.algebra import (
    ArrowAlgebra,
    check_algebra,
    check_arrow_bialgebra,
    check_arrow_dagger_frobenius,
    check_arrow_frobenius,
    check_arrow_hopf,
    check_arrow_monoid,
    check_bialgebra,
    check_dagger,
    check_frobenius,
    check_hopf,
    check_monoid,
    failing_squares,
    is_structure_morphism,
    make_arrow_algebra,
)
from arrowcat.arrow import ArrowObject
from arrowcat.errors import NotAMorphism, NotUnitary
from arrowcat.exactmat import MAT_Q_UNITARY, RatMatrix, identity
from arrowcat.exactmat.algebras import AlgebraData, basis_copying_algebra, group_algebra
from arrowcat.exactmat.groups import cyclic, homomorphisms, standard_groups, symmetric
from arrowcat.exactmat.matrix import permutation_matrix
from arrowcat.monoidal import MonoidalStructure

GROUPS = standard_groups()
ROT = RatMatrix(2, 2, [Fraction(3, 5), Fraction(-4, 5), Fraction(4, 5), Fraction(3, 5)])


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_group_algebras_are_hopf(name):
    a = group_algebra(GROUPS[name])
    assert check_hopf(a) and check_algebra(a)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_copy_algebras_are_special_dagger_frobenius(n):
    c = basis_copying_algebra(n)
    assert check_frobenius(c) and check_dagger(c) and check_algebra(c)


def test_group_algebra_is_not_frobenius():
    z2 = group_algebra(cyclic(2))
    assert check_bialgebra(z2)
    assert not check_frobenius(z2)


def test_copy_algebra_is_not_bialgebra():
    # Delta(1) = sum e_i (x) e_i, but (1 (x) 1) has all n^2 terms
    assert not check_bialgebra(basis_copying_algebra(2))
    assert check_bialgebra(basis_copying_algebra(1))


def test_rescaling_breaks_only_the_special_law():
    c = basis_copying_algebra(3)
    bad = c.with_maps(comult=c.comult * 2, counit=c.counit * Fraction(1, 2))
    assert check_monoid(bad)
    v = check_frobenius(bad)
    assert not v and v.detail.startswith("special law")
    assert v.failing_edge == "delta ; mu != id [matrix]"
    assert check_frobenius(bad.with_maps(flags=bad.flags - {"special"}))


def test_identity_antipode_fails_for_nontrivial_group():
    a = group_algebra(cyclic(3))
    assert not check_hopf(a.with_maps(antipode=identity(3)))
    # every element of Z2 is its own inverse
    z2 = group_algebra(cyclic(2))
    assert check_hopf(z2.with_maps(antipode=identity(2)))


def test_shape_validation():
    with pytest.raises(ValueError):
        AlgebraData(2, mult=identity(2))
    with pytest.raises(ValueError):
        AlgebraData(1, flags={"magic"})


def test_homomorphisms_induce_hopf_arrows():
    s3, z2 = symmetric(3), cyclic(2)
    A, B = group_algebra(s3), group_algebra(z2)
    homs = homomorphisms(s3, z2)
    assert len(homs) == 2
    for h in homs:
        f = h.matrix()
        assert is_structure_morphism(f, A, B, "hopf")
        aa = make_arrow_algebra(ArrowObject.of(f), A, B)
        assert check_arrow_monoid(aa) and check_arrow_bialgebra(aa) and check_arrow_hopf(aa)


def test_non_homomorphism_is_rejected_naming_a_square():
    z3 = group_algebra(cyclic(3))
    f = identity(3) * 2
    assert failing_squares(f, z3, z3, ("mult", "unit", "comult", "counit")) == ["mu", "eta", "delta", "eps"]
    with pytest.raises(NotAMorphism, match="mu"):
        make_arrow_algebra(ArrowObject.of(f), z3, z3)


def test_permutations_are_dagger_frobenius_arrows():
    c = basis_copying_algebra(3)
    f = ArrowObject.of(permutation_matrix([2, 0, 1]))
    aa = make_arrow_algebra(f, c, c, MonoidalStructure(MAT_Q_UNITARY))
    assert check_arrow_frobenius(aa)
    assert check_arrow_dagger_frobenius(aa)


def test_rotation_is_not_a_copy_morphism():
    c = basis_copying_algebra(2)
    assert not is_structure_morphism(ROT, c, c, "frobenius")


def test_dagger_frobenius_needs_orthogonal_arrow():
    z = group_algebra(cyclic(2))
    aa = ArrowAlgebra(ArrowObject.of(identity(2) * 2), z, z)
    with pytest.raises(NotUnitary):
        check_arrow_dagger_frobenius(aa)


def test_lifted_mult_with_corrupted_component_fails():
    z3 = group_algebra(cyclic(3))
    bad = z3.with_maps(mult=z3.mult * 2)
    v = check_arrow_monoid(ArrowAlgebra(ArrowObject.of(identity(3)), bad, z3))
    assert not v
