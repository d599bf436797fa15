"""Characters as polynomials in the coefficients of the standard characteristic polynomial."""

from .branching import (
    ClassMapError,
    restriction_image_rank,
    restriction_matrix,
    spolynomial_coordinates,
    spolynomial_values,
)
from .classpoint import ClassPoint, PointFiber, all_class_points, class_points, fiber_of_class, partitions, s_vector
from .ideal import KernelIdealBasis, generic_relations, kernel_ideal, separating_witness
from .interpolation import (
    DegreeBoundTooSmallError,
    NotInRestrictionImageError,
    fiber_values,
    interpolate_character,
    scaled_idempotents,
)
from .lattice import (
    VirtualCharacter,
    reduced_character_basis,
    restriction_lattice,
    virtual_character,
)
from .spoly import (
    SPolynomial,
    SPolynomialError,
    alternating_basis,
    evaluate,
    format_spolynomial,
    linear_combination,
    monomials_up_to,
    parse_spolynomial,
    symmetric_basis,
)

__all__ = [
    "ClassMapError",
    "ClassPoint",
    "DegreeBoundTooSmallError",
    "KernelIdealBasis",
    "NotInRestrictionImageError",
    "PointFiber",
    "SPolynomial",
    "SPolynomialError",
    "VirtualCharacter",
    "all_class_points",
    "alternating_basis",
    "class_points",
    "evaluate",
    "fiber_of_class",
    "fiber_values",
    "format_spolynomial",
    "generic_relations",
    "interpolate_character",
    "kernel_ideal",
    "linear_combination",
    "monomials_up_to",
    "parse_spolynomial",
    "partitions",
    "reduced_character_basis",
    "restriction_image_rank",
    "restriction_lattice",
    "restriction_matrix",
    "s_vector",
    "scaled_idempotents",
    "separating_witness",
    "spolynomial_coordinates",
    "spolynomial_values",
    "symmetric_basis",
    "virtual_character",
]
