"""Frobenius statistics: prime samples, Gram matrices, convergence and group identification."""

from .basis import (
    BasisError,
    TestBasis,
    TestFunction,
    joint_basis,
    kronecker_function,
    parse_basis,
    polynomial_basis,
    rational_irreducible_basis,
    reduced_basis,
    resolve_basis,
)
from .gram import (
    BatchNorms,
    GramReport,
    bordered_gram,
    convergence_run,
    cross_gram,
    empirical_gram,
    error_matrix,
    error_norms,
    gram_report,
    is_symmetric,
    joint_gram,
    round_matrix,
    stable_point,
    theoretical_gram,
)
from .identify import (
    CandidateVerdict,
    IdentificationResult,
    Witness,
    exclude_by_kernel,
    identify_group,
)
from .kronecker import DiscriminantError, KroneckerCharacter, is_fundamental_discriminant, kronecker_character
from .primes import iter_primes, primes_between, unramified_primes
from .sampling import (
    PrimeSample,
    SampleEntry,
    cycle_type_frequencies,
    haar_sample,
    sample_joint,
    sample_primes,
)

__all__ = [
    "BasisError",
    "BatchNorms",
    "CandidateVerdict",
    "DiscriminantError",
    "GramReport",
    "IdentificationResult",
    "KroneckerCharacter",
    "PrimeSample",
    "SampleEntry",
    "TestBasis",
    "TestFunction",
    "Witness",
    "bordered_gram",
    "convergence_run",
    "cross_gram",
    "cycle_type_frequencies",
    "empirical_gram",
    "error_matrix",
    "error_norms",
    "exclude_by_kernel",
    "gram_report",
    "haar_sample",
    "identify_group",
    "is_fundamental_discriminant",
    "is_symmetric",
    "iter_primes",
    "joint_basis",
    "joint_gram",
    "kronecker_character",
    "kronecker_function",
    "parse_basis",
    "polynomial_basis",
    "primes_between",
    "rational_irreducible_basis",
    "reduced_basis",
    "resolve_basis",
    "round_matrix",
    "sample_joint",
    "sample_primes",
    "stable_point",
    "theoretical_gram",
    "unramified_primes",
]
