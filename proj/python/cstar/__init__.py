"""Operator theory over finite-dimensional C*-algebras A = M_{n_1} + ... + M_{n_k}."""

from ._core import (
    CstarError,
    InvarianceError,
    Map,
    ParseError,
    StructuralError,
    TheoremViolation,
    UnmetHypothesis,
    b_fredholm_report,
    banach_perturbation,
    banach_product,
    bouldin_criterion,
    closed_sum_report,
    commuting_drazin_criterion,
    dixmier_angle,
    drazin_dual_check,
    drazin_index,
    drazin_inverse,
    drazin_report,
    exact_sequence,
    family_names,
    fredholm_report,
    multiplier_family,
    nonclosed_square_family,
    probe,
    product_chain,
    regular_operator,
    render,
    set_tolerances,
    shift_counterexample,
    suite_names,
    tolerances,
    verify,
    weyl_perturbation_chain,
)

__version__ = "0.1.0"


def scalar_map(matrix, shape=(1,)):
    """The complex matrix tensored with the unit of A."""
    import numpy as np

    c = np.asarray(matrix, dtype=complex)
    blocks = [np.kron(c, np.eye(n)) for n in shape]
    return Map(list(shape), blocks)
