"""Choi matrices, k-positivity checks, peel-off and CP + coCP decompositions."""

from ._posmap import (
    BipartiteVector,
    ChoiMatrix,
    Decomposition,
    DensityMatrix,
    DimensionError,
    EnsembleDecomposition,
    InfeasibleError,
    IteratedPeelResult,
    LiftIndexSet,
    NotTwoPositiveError,
    PeelResult,
    PositivityVerdict,
    RefutedInputError,
    VerifyReport,
    ZeroMapError,
    check_completely_copositive,
    check_completely_positive,
    check_k_copositive,
    check_k_positive,
    choi_of_map,
    decompose_2copositive_3x3,
    decompose_2positive_3x3,
    eig_hermitian,
    gchoi_alternative_decomposition,
    gchoi_choi,
    gchoi_condition_star,
    gchoi_explicit_decomposition,
    gchoi_is_2positive,
    hermitize,
    is_ppt,
    is_psd,
    kron,
    lift,
    min_schmidt_quadratic,
    omega_choi,
    omega_is_positive,
    omega_split,
    pair,
    partial_transpose,
    peel_copositive,
    peel_iterate,
    peel_once,
    pinv,
    range_included,
    schmidt_number_lower,
    schmidt_number_upper,
    schmidt_rank,
    schmidt_rank_of,
    schur_complement,
    select_pivot,
    split_cp_ccp,
    unlift,
    verify_decomposition,
)
from ._posmap import __version__

__all__ = [
    "BipartiteVector",
    "ChoiMatrix",
    "Decomposition",
    "DensityMatrix",
    "DimensionError",
    "EnsembleDecomposition",
    "InfeasibleError",
    "IteratedPeelResult",
    "LiftIndexSet",
    "NotTwoPositiveError",
    "PeelResult",
    "PositivityVerdict",
    "RefutedInputError",
    "VerifyReport",
    "ZeroMapError",
    "check_completely_copositive",
    "check_completely_positive",
    "check_k_copositive",
    "check_k_positive",
    "choi_of_map",
    "decompose_2copositive_3x3",
    "decompose_2positive_3x3",
    "eig_hermitian",
    "gchoi_alternative_decomposition",
    "gchoi_choi",
    "gchoi_condition_star",
    "gchoi_explicit_decomposition",
    "gchoi_is_2positive",
    "hermitize",
    "is_ppt",
    "is_psd",
    "kron",
    "lift",
    "min_schmidt_quadratic",
    "omega_choi",
    "omega_is_positive",
    "omega_split",
    "pair",
    "partial_transpose",
    "peel_copositive",
    "peel_iterate",
    "peel_once",
    "pinv",
    "range_included",
    "schmidt_number_lower",
    "schmidt_number_upper",
    "schmidt_rank",
    "schmidt_rank_of",
    "schur_complement",
    "select_pivot",
    "split_cp_ccp",
    "unlift",
    "verify_decomposition",
    "__version__",
]
