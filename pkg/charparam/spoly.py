# charparam/spoly.py
"""Polynomials in ``s1, ..., s(n-1)`` with exact rational coefficients."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

from .classpoint import ClassPoint

Monomial = Tuple[int, ...]
Number = Union[int, Fraction]

_TRANSFORMS = standard_transformations + (implicit_multiplication, convert_xor)


class SPolynomialError(ValueError):
    """Raised for malformed s-polynomial text or variable/degree mismatches."""


def monomial_key(m: Monomial) -> Tuple[int, Tuple[int, ...]]:
    """Ascending total degree; inside a degree ``s1`` outranks ``s2`` (graded lex)."""
    return sum(m), tuple(-e for e in m)


@lru_cache(maxsize=256)
def monomials_up_to(nvars: int, degree_bound: int) -> Tuple[Monomial, ...]:
    """Every monomial of total degree ``<= degree_bound`` in canonical order."""
    out = []
    for total in range(degree_bound + 1):
        for combo in itertools.combinations_with_replacement(range(nvars), total):
            m = [0] * nvars
            for v in combo:
                m[v] += 1
            out.append(tuple(m))
    return tuple(sorted(set(out), key=monomial_key))


def monomial_value(m: Monomial, point: ClassPoint) -> int:
    value = 1
    for e, s in zip(m, point.svector):
        if e:
            value *= s**e
    return value


@dataclass(frozen=True)
class SPolynomial:
    """Canonical sparse polynomial: ``terms`` sorted by :func:`monomial_key`, no zero coefficients.

    :param nvars: number of variables, ``n - 1`` for degree-``n`` class points
    """

    nvars: int
    terms: Tuple[Tuple[Monomial, Fraction], ...]

    @classmethod
    def from_dict(cls, nvars: int, coefficients: Mapping[Monomial, Number]) -> "SPolynomial":
        clean = {}
        for m, c in coefficients.items():
            if len(m) != nvars:
                raise SPolynomialError(f"monomial {m} has wrong arity for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[tuple(m)] = c
        return cls(nvars, tuple(sorted(clean.items(), key=lambda t: monomial_key(t[0]))))

    @classmethod
    def constant(cls, nvars: int, value: Number = 1) -> "SPolynomial":
        return cls.from_dict(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, k: int) -> "SPolynomial":
        """``s_k`` with 1-based ``k``."""
        if not 1 <= k <= nvars:
            raise SPolynomialError(f"s{k} is out of range for {nvars} variables")
        m = [0] * nvars
        m[k - 1] = 1
        return cls.from_dict(nvars, {tuple(m): 1})

    def as_dict(self) -> Dict[Monomial, Fraction]:
        return dict(self.terms)

    @property
    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, point: ClassPoint) -> Fraction:
        if point.degree - 1 != self.nvars:
            raise SPolynomialError(
                f"polynomial in {self.nvars} variables evaluated at a degree-{point.degree} point"
            )
        return sum((c * monomial_value(m, point) for m, c in self.terms), Fraction(0))

    def _check(self, other: "SPolynomial") -> None:
        if self.nvars != other.nvars:
            raise SPolynomialError("s-polynomials in different variable counts")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SPolynomial.constant(self.nvars, other)
        self._check(other)
        acc = self.as_dict()
        for m, c in other.terms:
            acc[m] = acc.get(m, Fraction(0)) + c
        return SPolynomial.from_dict(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return SPolynomial(self.nvars, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SPolynomial.from_dict(self.nvars, {m: c * other for m, c in self.terms})
        self._check(other)
        acc: Dict[Monomial, Fraction] = {}
        for (m1, c1), (m2, c2) in itertools.product(self.terms, other.terms):
            m = tuple(a + b for a, b in zip(m1, m2))
            acc[m] = acc.get(m, Fraction(0)) + c1 * c2
        return SPolynomial.from_dict(self.nvars, acc)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_spolynomial(self)


def _format_monomial(m: Monomial) -> str:
    parts = []
    for k, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"s{k}")
        elif e > 1:
            parts.append(f"s{k}^{e}")
    return "*".join(parts)


def format_spolynomial(p: SPolynomial) -> str:
    """Highest degree first, ``s1``-heavy monomials first inside a degree."""
    if p.is_zero():
        return "0"
    ordered = sorted(p.terms, key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
    chunks = []
    for m, c in ordered:
        mono = _format_monomial(m)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not chunks:
            chunks.append(body if c > 0 else "-" + body)
        else:
            chunks.append(("+ " if c > 0 else "- ") + body)
    return " ".join(chunks)


def spoly_symbols(nvars: int) -> List[sympy.Symbol]:
    return [sympy.Symbol(f"s{k}") for k in range(1, nvars + 1)]


def parse_spolynomial(text: str, nvars: int) -> SPolynomial:
    """Parse ``"s1^2 - s1 - s2 - 1"`` or ``"(4*s2 + 3*s3 - s1*s2 - 4*s1 - 2)/2"``.

    :raises SPolynomialError: on syntax errors or variables beyond ``s{nvars}``
    """
    symbols = spoly_symbols(nvars)
    local = {str(s): s for s in symbols}
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMS)
    except Exception as exc:
        raise SPolynomialError(f"cannot parse s-polynomial {text!r}: {exc}") from exc
    extra = {str(s) for s in expr.free_symbols} - set(local)
    if extra:
        raise SPolynomialError(f"unknown variables {sorted(extra)} for {nvars} s-variables")
    if not symbols:
        value = sympy.Rational(expr)
        return SPolynomial.constant(0, Fraction(int(value.p), int(value.q)))
    try:
        poly = sympy.Poly(expr, *symbols, domain="QQ")
    except sympy.PolynomialError as exc:
        raise SPolynomialError(f"{text!r} is not a polynomial in s1..s{nvars}") from exc
    coeffs = {}
    for m, c in poly.terms():
        q = sympy.Rational(c)
        coeffs[tuple(int(e) for e in m)] = Fraction(int(q.p), int(q.q))
    return SPolynomial.from_dict(nvars, coeffs)


def evaluate(p: SPolynomial, point: ClassPoint) -> Fraction:
    return p.evaluate(point)


def symmetric_basis(n: int) -> List[SPolynomial]:
    """``(1, s1, ..., s(n-1))``: the irreducible characters of ``Sym_n`` carried by exterior powers."""
    return [SPolynomial.constant(n - 1)] + [SPolynomial.variable(n - 1, k) for k in range(1, n)]


def alternating_basis(n: int) -> List[SPolynomial]:
    """``(1, s1, ..., s_m)`` with ``m = floor((n-1)/2)``; the rest coincide on ``Alt_n``."""
    return [SPolynomial.constant(n - 1)] + [
        SPolynomial.variable(n - 1, k) for k in range(1, (n - 1) // 2 + 1)
    ]


def linear_combination(polys: Iterable[SPolynomial], coefficients: Iterable[Number], nvars: int) -> SPolynomial:
    acc = SPolynomial.constant(nvars, 0)
    for p, c in zip(polys, coefficients):
        acc = acc + p * Fraction(c)
    return acc
