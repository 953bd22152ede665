"""Small hand-derived cases, one per operation, pinned as exact values."""

from fractions import Fraction

import pytest

from arrowcat.algebra import is_structure_morphism, make_arrow_algebra, check_arrow_hopf
from arrowcat.arrow import ArrowObject, arrow_id, lift_nat_trans, NatTransData, identity_functor
from arrowcat.duality import (
    dual_solvability_oracle,
    has_dual,
    inverse_from_duality,
    make_arrow_dual,
    pivot_arrow,
    twist_arrow,
)
from arrowcat.errors import NotInvertible, NotSquare
from arrowcat.exactmat import MAT_Q_CORE, MAT_Q_UNITARY, RatMatrix, identity, invert
from arrowcat.exactmat.algebras import group_algebra
from arrowcat.exactmat.generators import random_instance
from arrowcat.exactmat.groups import GroupHom, cyclic
from arrowcat.exactmat.matrix import commutation_matrix, compose, kronecker, permutation_matrix
from arrowcat.monoidal import (
    MonoidalStructure,
    braiding_arrow,
    check_braided_functor_lift,
    check_monoidal_nat_trans_lift,
    conjugation_monoidal_functor,
    doubling_monoidal_functor,
    identity_monoidal_functor,
    lift_monoidal_functor,
    tensor_arrow_objects,
)
from arrowcat.sampling import Sampler

M = RatMatrix.from_rows


def test_kronecker_shapes_and_values():
    a, b = RatMatrix(3, 2, [1] * 6), RatMatrix(7, 5, [1] * 35)
    assert kronecker(a, b).shape == (21, 10)
    assert kronecker(identity(1), b) == b
    assert kronecker(M([[2]]), M([[1, 1]])) == M([[2, 2]])


def test_invert_cases():
    assert invert(M([[2]])) == M([["1/2"]])
    with pytest.raises(NotInvertible):
        invert(M([[1, 0], [0, 0]]))
    with pytest.raises(NotSquare):
        invert(M([[1, 2]]))


def test_commutation_matrix_cases():
    assert commutation_matrix(1, 4) == identity(4)
    assert compose(commutation_matrix(2, 3), commutation_matrix(3, 2)) == identity(6)


def test_group_algebra_z2_and_z3():
    z2 = group_algebra(cyclic(2))
    assert z2.mult == M([[1, 0, 0, 1], [0, 1, 1, 0]])
    assert z2.antipode == identity(2)
    assert group_algebra(cyclic(3)).antipode == M([[1, 0, 0], [0, 0, 1], [0, 1, 0]])


def test_generator_cases():
    r = random_instance("orthogonal", 2, 0)
    assert r.is_orthogonal() and MAT_Q_UNITARY.is_morphism(r)
    p = random_instance("permutation", 4, 3)
    rows = [p.entries[4 * i:4 * i + 4] for i in range(4)]
    assert all(sum(1 for x in row if x) == 1 for row in rows)
    assert all(sum(1 for row in rows if row[j]) == 1 for j in range(4))
    assert random_instance("invertible", 3, 9) == random_instance("invertible", 3, 9)


def test_arrow_identity_of_unit():
    u = MonoidalStructure().unit_arrow
    assert arrow_id(u).top == identity(1) and arrow_id(u).bottom == identity(1)
    f = ArrowObject.of(M([[1, 2]]))
    assert (arrow_id(f).top, arrow_id(f).bottom) == (identity(2), identity(1))


def test_scalar_nat_trans_lift():
    Id = identity_functor()
    two = NatTransData(Id, Id, lambda n: identity(n) * 2, "2")
    L = lift_nat_trans(two, [M([[1, 2], [3, 4]])])
    f = ArrowObject.of(M([[1, 2, 3]]))
    c = L.component(f)
    assert (c.top, c.bottom) == (identity(3) * 2, identity(1) * 2)


def test_tensor_of_basis_columns():
    e1, e2 = ArrowObject.of(M([[1], [0]])), ArrowObject.of(M([[0], [1]]))
    assert tensor_arrow_objects(e1, e2).map == M([[0], [1], [0], [0]])
    assert tensor_arrow_objects(ArrowObject.of(M([[1], [1]])), ArrowObject.of(M([[1], [2], [3]]))).map.shape == (6, 1)


def test_braiding_with_unit_is_identity():
    f = ArrowObject.of(M([[1, 2], [3, 4]]))
    b = braiding_arrow(f, MonoidalStructure().unit_arrow)
    assert (b.top, b.bottom) == (identity(2), identity(2))


def test_dual_cases():
    assert not has_dual(ArrowObject.of(M([[1, 0], [0, 0]])))
    assert dual_solvability_oracle(ArrowObject.of(M([[1, 0], [0, 0]]))) is None
    assert dual_solvability_oracle(ArrowObject.of(identity(1))) == identity(1)
    assert make_arrow_dual(ArrowObject.of(M([[2]]))).dual.map == M([["1/2"]])
    P = permutation_matrix([1, 2, 0])
    assert make_arrow_dual(ArrowObject.of(P)).dual.map == P
    d = make_arrow_dual(ArrowObject.of(identity(3)))
    assert d.eval.top == d.eval.bottom and d.coeval.top == d.coeval.bottom
    K = commutation_matrix(2, 2)
    assert inverse_from_duality(ArrowObject.of(K)) == K
    assert inverse_from_duality(ArrowObject.of(M([[2]]))) == M([["1/2"]])


def test_pivot_and_twist_at_unit():
    u = MonoidalStructure(MAT_Q_CORE).unit_arrow
    assert pivot_arrow(u) == arrow_id(u) == twist_arrow(u)


def test_hom_z2_to_z4_is_hopf():
    z2, z4 = cyclic(2), cyclic(4)
    h = GroupHom(z2, z4, (0, 2))
    A, B = group_algebra(z2), group_algebra(z4)
    f = h.matrix()
    assert f == M([[1, 0], [0, 0], [0, 1], [0, 0]])
    assert is_structure_morphism(f, A, B, "hopf")
    assert check_arrow_hopf(make_arrow_algebra(ArrowObject.of(f), A, B))
    for kind in ("monoid", "comonoid", "hopf"):
        assert is_structure_morphism(identity(4), B, B, kind)


@pytest.mark.parametrize("Fm", [identity_monoidal_functor(), doubling_monoidal_functor()], ids=lambda F: F.name)
def test_braided_functor_lift(Fm):
    L = lift_monoidal_functor(Fm, MonoidalStructure(), [(1, 2, 2)], [])
    s = Sampler(seed=8, max_dim=2)
    for _ in range(5):
        assert check_braided_functor_lift(L, s.arrow_object(), s.arrow_object())


def test_corrupted_F2_breaks_braided_lift():
    D = doubling_monoidal_functor()
    # a uniform scale would cancel across the square; scale by the first index instead
    bad = D.__class__(D.base, lambda a, b: D.F2(a, b) * a, D.F0, "bad")
    L = lift_monoidal_functor(bad, MonoidalStructure(), validate=False)
    f = ArrowObject.of(M([[1, 1], [0, 1]]))
    g = ArrowObject.of(M([[1, 2]]))
    assert not check_braided_functor_lift(L, f, g)


def test_monoidal_nat_trans_lift_identity_and_scalar_one():
    Id = identity_monoidal_functor()
    base = Id.base
    for eta in (NatTransData(base, base, identity, "id"), NatTransData(base, base, lambda n: identity(n) * Fraction(1), "1")):
        s = Sampler(seed=2, max_dim=2)
        pairs = [(s.arrow_object(), s.arrow_object()) for _ in range(3)]
        assert check_monoidal_nat_trans_lift(eta, Id, Id, pairs)


def test_conjugation_monoidal_functor_needs_unit_one():
    Fm = conjugation_monoidal_functor(lambda n: identity(n))
    assert Fm.F0 == identity(1)
