# polyarith/intpoly.py
"""Integer polynomials: parsing, formatting and discriminants."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

logger = logging.getLogger(__name__)

_X = sympy.Symbol("x")
_TRANSFORMS = standard_transformations + (implicit_multiplication, convert_xor)


class PolynomialError(ValueError):
    """Raised for malformed polynomials or violated polynomial preconditions."""


class RamifiedPrimeError(PolynomialError):
    """Raised when a prime divides ``disc(f)·lc(f)`` and has no well-defined type."""

    def __init__(self, prime: int, reason: str = "ramified"):
        super().__init__(f"prime {prime} is {reason} for this polynomial")
        self.prime = prime


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients in ascending degree order.

    :param coefficients: ``(a_0, a_1, ..., a_n)`` with ``a_n != 0`` and ``n >= 1``
    """

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if len(coeffs) < 2:
            raise PolynomialError("polynomial must have degree at least 1")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coefficients[-1]

    def descending(self) -> list[int]:
        """Coefficients highest degree first, the layout of ``sympy.polys.galoistools``."""
        return list(reversed(self.coefficients))

    def to_sympy(self) -> sympy.Poly:
        return sympy.Poly(self.descending(), _X, domain="ZZ")

    def __str__(self) -> str:
        return format_polynomial(self)


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse ``"x^4 + x + 1"`` or a JSON array of ascending coefficients.

    :raises PolynomialError: on syntax errors, foreign symbols, rational
        coefficients or constant input
    """
    raw = text.strip()
    if not raw:
        raise PolynomialError("empty polynomial text")
    if raw.startswith("["):
        try:
            values = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise PolynomialError(f"invalid coefficient array {raw!r}") from exc
        if not isinstance(values, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in values
        ):
            raise PolynomialError("coefficient array must contain integers only")
        return polynomial_from_coefficients(values)

    try:
        expr = parse_expr(raw, local_dict={"x": _X}, transformations=_TRANSFORMS)
    except Exception as exc:  # sympy raises a zoo of exception types
        raise PolynomialError(f"cannot parse polynomial {raw!r}: {exc}") from exc
    extra = expr.free_symbols - {_X}
    if extra:
        raise PolynomialError(f"unexpected symbols {sorted(map(str, extra))} in {raw!r}")
    try:
        poly = sympy.Poly(expr, _X)
    except sympy.PolynomialError as exc:
        raise PolynomialError(f"{raw!r} is not a polynomial in x") from exc
    coeffs = poly.all_coeffs()
    if not all(c.is_integer for c in coeffs):
        raise PolynomialError(f"{raw!r} has non-integer coefficients")
    return IntPolynomial(tuple(int(c) for c in reversed(coeffs)))


def format_polynomial(f: IntPolynomial) -> str:
    out = []
    for k in range(f.degree, -1, -1):
        c = f.coefficients[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        body = str(mag) if (mag != 1 or k == 0) else ""
        term = body + mono
        if not out:
            out.append(term if sign == "+" else "-" + term)
        else:
            out.append(f"{sign} {term}")
    return " ".join(out)


def discriminant(f: IntPolynomial) -> int:
    """``(-1)^(n(n-1)/2) · Res(f, f') / lc(f)``, exactly."""
    return int(f.to_sympy().discriminant())


def bad_prime_modulus(f: IntPolynomial) -> int:
    """``|disc(f) · lc(f)|``; a prime is skipped exactly when it divides this number."""
    return abs(discriminant(f) * f.leading_coefficient)


def bad_primes(f: IntPolynomial) -> list[int]:
    """Prime divisors of :func:`bad_prime_modulus`, ascending."""
    return sorted(sympy.factorint(bad_prime_modulus(f)))


def is_ramified(f: IntPolynomial, p: int) -> bool:
    return bad_prime_modulus(f) % p == 0


def polynomial_from_coefficients(coefficients: Sequence[int]) -> IntPolynomial:
    """Ascending coefficients as in the JSON array form; trailing zeros are dropped."""
    return IntPolynomial(tuple(coefficients))
