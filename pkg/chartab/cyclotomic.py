# chartab/cyclotomic.py
"""Exact elements of the cyclotomic field ``Q(zeta_m)``.

Values are kept over the power basis ``1, z, ..., z^(phi(m)-1)`` and reduced
modulo the ``m``-th cyclotomic polynomial after every operation. Rational
values (the common case for permutation characters) short-circuit the
polynomial arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

Number = Union[int, Fraction]

_Z = sympy.Symbol("z")


class CyclotomicError(ValueError):
    """Raised when mixing fields of different orders or parsing bad value text."""


@lru_cache(maxsize=None)
def cyclotomic_coefficients(m: int) -> Tuple[int, ...]:
    """Ascending integer coefficients of the ``m``-th cyclotomic polynomial."""
    poly = sympy.Poly(sympy.cyclotomic_poly(m, _Z), _Z)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    return int(sympy.totient(m))


def _reduce(m: int, coeffs: Mapping[int, Fraction]) -> Tuple[Tuple[int, Fraction], ...]:
    phi = euler_phi(m)
    dense: Dict[int, Fraction] = {}
    for e, c in coeffs.items():
        if c:
            k = e % m
            dense[k] = dense.get(k, Fraction(0)) + c
    if any(e >= phi for e in dense):
        cyc = cyclotomic_coefficients(m)
        # z^phi = -sum_{j<phi} cyc[j] z^j
        for e in range(m - 1, phi - 1, -1):
            c = dense.pop(e, Fraction(0))
            if not c:
                continue
            shift = e - phi
            for j in range(phi):
                if cyc[j]:
                    dense[shift + j] = dense.get(shift + j, Fraction(0)) - c * cyc[j]
    return tuple(sorted((e, c) for e, c in dense.items() if c))


@dataclass(frozen=True)
class CyclotomicNumber:
    """``sum c_e z^e`` with ``z`` a primitive ``order``-th root of unity.

    :param order: ``m``; in a character table this is the group exponent
    :param terms: ``((e, c_e), ...)`` ascending, nonzero, ``e < phi(m)``
    """

    order: int
    terms: Tuple[Tuple[int, Fraction], ...]

    @classmethod
    def from_exponents(cls, order: int, coeffs: Mapping[int, Number]) -> "CyclotomicNumber":
        return cls(order, _reduce(order, {int(e): Fraction(c) for e, c in coeffs.items()}))

    @classmethod
    def rational(cls, order: int, value: Number) -> "CyclotomicNumber":
        value = Fraction(value)
        return cls(order, ((0, value),) if value else ())

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "CyclotomicNumber":
        return cls.from_exponents(order, {k: 1})

    def is_rational(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise CyclotomicError(f"{self} is not rational")
        return self.terms[0][1] if self.terms else Fraction(0)

    def is_integral_rational(self) -> bool:
        return self.is_rational() and self.to_fraction().denominator == 1

    def coordinates(self) -> Tuple[Fraction, ...]:
        """Dense power-basis coordinates of length ``phi(order)``."""
        out = [Fraction(0)] * euler_phi(self.order)
        for e, c in self.terms:
            out[e] = c
        return tuple(out)

    def _same(self, other: "CyclotomicNumber") -> None:
        if self.order != other.order:
            raise CyclotomicError(f"cannot mix Q(zeta_{self.order}) and Q(zeta_{other.order})")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.rational(self.order, other)
        self._same(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return CyclotomicNumber(self.order, tuple(sorted((e, c) for e, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return CyclotomicNumber(self.order, tuple((e, c * other) for e, c in self.terms if c * other))
        self._same(other)
        if other.is_rational():
            return self * other.to_fraction()
        if self.is_rational():
            return other * self.to_fraction()
        acc: Dict[int, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, Fraction(0)) + c1 * c2
        return CyclotomicNumber(self.order, _reduce(self.order, acc))

    __rmul__ = __mul__

    def __truediv__(self, other: Number):
        if not isinstance(other, (int, Fraction)):
            raise CyclotomicError("only division by rationals is supported")
        return self * (1 / Fraction(other))

    def galois(self, k: int) -> "CyclotomicNumber":
        """Image under ``z -> z^k``; ``k`` must be a unit modulo the order."""
        if math.gcd(k, self.order) != 1:
            raise CyclotomicError(f"{k} is not a unit modulo {self.order}")
        if self.is_rational():
            return self
        return CyclotomicNumber.from_exponents(self.order, {e * k: c for e, c in self.terms})

    def embed(self, order: int) -> "CyclotomicNumber":
        """The same number viewed in ``Q(zeta_order)``; ``self.order`` must divide ``order``."""
        if order % self.order:
            raise CyclotomicError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{order})")
        if order == self.order:
            return self
        if self.is_rational():
            return CyclotomicNumber.rational(order, self.to_fraction())
        step = order // self.order
        return CyclotomicNumber.from_exponents(order, {e * step: c for e, c in self.terms})

    def conjugate(self) -> "CyclotomicNumber":
        return self.galois(-1 % self.order) if self.order > 1 else self

    def to_complex(self) -> complex:
        return sum(
            (float(c) * complex(math.cos(2 * math.pi * e / self.order), math.sin(2 * math.pi * e / self.order))
             for e, c in self.terms),
            0j,
        )

    def __str__(self) -> str:
        return format_cyclotomic(self)


def format_cyclotomic(x: CyclotomicNumber) -> str:
    """Render in ``"a+b*z^k"`` syntax, e.g. ``"-1"``, ``"1+2*z^3"``, ``"-z-1/2*z^2"``."""
    if not x.terms:
        return "0"
    out = ""
    for e, c in x.terms:
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = "z" if e == 1 else f"z^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else ("+" if out else "")
        out += sign + body
    return out


def parse_cyclotomic(text: Union[str, int], order: int) -> CyclotomicNumber:
    """Read a value written in ``"a+b*z^k"`` syntax (or a bare integer) in ``Q(zeta_order)``."""
    if isinstance(text, int) and not isinstance(text, bool):
        return CyclotomicNumber.rational(order, text)
    try:
        expr = parse_expr(
            str(text), local_dict={"z": _Z}, transformations=standard_transformations + (convert_xor,)
        )
        poly = sympy.Poly(expr, _Z, domain="QQ")
    except Exception as exc:
        raise CyclotomicError(f"cannot parse cyclotomic value {text!r}") from exc
    coeffs = {}
    for (e,), c in poly.terms():
        q = sympy.Rational(c)
        coeffs[int(e)] = Fraction(int(q.p), int(q.q))
    return CyclotomicNumber.from_exponents(order, coeffs)


def inner_sum(values: Iterable[CyclotomicNumber], order: int) -> CyclotomicNumber:
    acc = CyclotomicNumber.rational(order, 0)
    for v in values:
        acc = acc + v
    return acc
