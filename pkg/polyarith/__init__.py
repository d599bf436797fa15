"""Exact integer-polynomial arithmetic and factorization types modulo primes."""

from .cycletype import CycleType
from .factorization import (
    factorization_type,
    factorization_types,
    irreducibility_hint,
    is_squarefree_mod,
)
from .intpoly import (
    IntPolynomial,
    PolynomialError,
    RamifiedPrimeError,
    bad_prime_modulus,
    bad_primes,
    discriminant,
    format_polynomial,
    is_ramified,
    parse_polynomial,
    polynomial_from_coefficients,
)

__all__ = [
    "CycleType",
    "IntPolynomial",
    "PolynomialError",
    "RamifiedPrimeError",
    "bad_prime_modulus",
    "bad_primes",
    "discriminant",
    "factorization_type",
    "factorization_types",
    "format_polynomial",
    "irreducibility_hint",
    "is_ramified",
    "is_squarefree_mod",
    "parse_polynomial",
    "polynomial_from_coefficients",
]
