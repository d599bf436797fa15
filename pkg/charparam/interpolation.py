# charparam/interpolation.py
"""Express class functions as polynomials in the s-variables."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from chartab import CyclotomicNumber
from utilities.config import get_degree_bound

from .classpoint import class_points
from .linalg import rref
from .spoly import SPolynomial, monomial_value, monomials_up_to

logger = logging.getLogger(__name__)

Value = Union[int, Fraction, CyclotomicNumber]


class NotInRestrictionImageError(ValueError):
    """The class function separates classes with the same cycle type."""


class DegreeBoundTooSmallError(ValueError):
    """No polynomial of the requested total degree matches the values."""

    def __init__(self, degree_bound: int):
        super().__init__(f"no s-polynomial of total degree <= {degree_bound} fits these values")
        self.degree_bound = degree_bound


def _as_fraction(value: Value) -> Fraction:
    if isinstance(value, CyclotomicNumber):
        if not value.is_rational():
            raise NotInRestrictionImageError(f"irrational value {value} cannot come from an s-polynomial")
        return value.to_fraction()
    return Fraction(value)


def fiber_values(values: Sequence[Value], G) -> List[Fraction]:
    """Collapse per-class values to one value per distinct class point.

    :raises NotInRestrictionImageError: if two classes on one fiber disagree
    """
    if len(values) != len(G.cycle_types):
        raise ValueError(f"expected {len(G.cycle_types)} class values, got {len(values)}")
    out = []
    for fiber in class_points(G):
        vals = {_as_fraction(values[k]) for k in fiber.classes}
        if len(vals) > 1:
            raise NotInRestrictionImageError(
                f"values differ on classes {list(fiber.classes)} of cycle type {fiber.cycle_type}"
            )
        out.append(vals.pop())
    return out


def interpolate_points(points, targets: Sequence[Fraction], degree_bound: int) -> SPolynomial:
    """Solve for the earliest-monomial polynomial through ``(points[i], targets[i])``."""
    nvars = points[0].degree - 1
    monos = monomials_up_to(nvars, degree_bound)
    augmented = [[Fraction(monomial_value(m, pt)) for m in monos] + [Fraction(t)] for pt, t in zip(points, targets)]
    reduced, pivots = rref(augmented)
    if len(monos) in pivots:
        raise DegreeBoundTooSmallError(degree_bound)
    coeffs = {monos[p]: row[-1] for row, p in zip(reduced, pivots)}
    return SPolynomial.from_dict(nvars, coeffs)


def interpolate_character(
    values: Sequence[Value], G, degree_bound: Optional[int] = None, max_degree: Optional[int] = None
) -> SPolynomial:
    """Polynomial in ``s1..s(n-1)`` reproducing per-class values on ``G``.

    With ``degree_bound=None`` the configured default is tried first and then
    raised one step at a time up to ``max_degree`` (``n - 1`` by default),
    since any function on the class points is a polynomial of degree below
    the number of points.

    :raises NotInRestrictionImageError: values separate fused classes
    :raises DegreeBoundTooSmallError: inconsistent system at the bound
    """
    targets = fiber_values(values, G)
    points = [f.point for f in class_points(G)]
    if degree_bound is not None:
        if degree_bound < 1:
            raise ValueError("degree bound must be at least 1")
        return interpolate_points(points, targets, degree_bound)
    top = max_degree or max(G.degree - 1, len(points))
    bound = min(get_degree_bound(), top)
    while True:
        try:
            return interpolate_points(points, targets, bound)
        except DegreeBoundTooSmallError:
            if bound >= top:
                raise
            bound += 1
            logger.debug("raising interpolation degree bound to %d", bound)


def scaled_idempotents(G, degree_bound: Optional[int] = None) -> List[SPolynomial]:
    """``|G| e_i`` for each distinct class point, in class-point order."""
    fibers = class_points(G)
    out = []
    for fiber in fibers:
        values = [G.order if k in fiber.classes else 0 for k in range(len(G.cycle_types))]
        out.append(interpolate_character(values, G, degree_bound))
    return out
