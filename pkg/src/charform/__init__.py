"""Exact toolkit for the characteristic discriminant of univariate polynomials.

Coefficient lists are ascending (a_0 first). Root tuples use the
``a_n * prod(x + x_i)`` convention: the polynomial vanishes at ``-x_i``.
"""
from .discriminant import DiscriminantValue, NonSquareDiscriminant, candidate_solutions, discriminant, normalized_value
from .hmatrix import HMatrix, build_h, diag_entry, diag_factored, quadratic_form, verify_identity
from .numeric import TolerancePolicy, approx_eq, binomial, factorial
from .poly import PaperRootTuple, Polynomial, derivative, evaluate, expand_factored, sum_coefficient
from .rewrite import (
    build_rewrite,
    characteristic_equation,
    derivative_chain,
    equation4_residual,
    verify_rewrite,
)
from .rootspace import (
    CharacteristicSet,
    PermutationFamily,
    characteristic_to_roots,
    enumerate_sets,
    organized_check,
    product_relations,
    reference_root,
    roots_to_characteristic,
    sum_property,
)
from .solver import SolverConfig, find_roots, to_paper_tuple

__version__ = "0.1.0"
