"""Exact rational linear algebra and the matrix categories."""

from ._backend import BACKEND
from .algebras import AlgebraData, basis_copying_algebra, group_algebra
from .categories import (
    CATEGORIES,
    MAT_N,
    MAT_Q,
    MAT_Q_CORE,
    MAT_Q_UNITARY,
    ConcreteCategory,
    cap,
    cup,
    group_algebra_category,
)
from .generators import random_instance
from .groups import GroupHom, GroupPresentation, cyclic, homomorphisms, standard_groups, symmetric
from .matrix import (
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

__all__ = [
    "AlgebraData", "BACKEND", "CATEGORIES", "ConcreteCategory", "GroupHom", "GroupPresentation",
    "MAT_N", "MAT_Q", "MAT_Q_CORE", "MAT_Q_UNITARY", "RatMatrix", "basis_copying_algebra",
    "basis_vector", "cap", "commutation_matrix", "compose", "cup", "cyclic", "group_algebra",
    "group_algebra_category", "homomorphisms", "identity", "invert", "is_invertible", "kron_all",
    "kronecker", "parse_rational", "permutation_matrix", "random_instance", "rank", "scalar",
    "solve", "standard_groups", "symmetric", "transpose", "zeros",
]
