# charparam/ideal.py
"""Kernel ideals: s-polynomials vanishing on every class point of a group.

Up to a degree bound the ideal is a finite-dimensional vector space, the
nullspace of the evaluation matrix. Products of the relations that hold on
all of ``Sym_n`` are split off, so the reported generators are the part
that actually tells ``G`` apart from ``Sym_n``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from utilities.config import get_degree_bound

from .classpoint import ClassPoint, class_points
from .linalg import in_span, nullspace, rref
from .spoly import Monomial, SPolynomial, monomial_value, monomials_up_to

logger = logging.getLogger(__name__)


def _descending(monos: Sequence[Monomial]) -> List[Monomial]:
    return sorted(monos, key=lambda m: (-sum(m), tuple(-e for e in m)))


def _vector(p: SPolynomial, columns: Sequence[Monomial]) -> List[Fraction]:
    coeffs = p.as_dict()
    allowed = set(columns)
    if any(m not in allowed for m in coeffs):
        raise ValueError(f"{p} exceeds the degree bound")
    return [coeffs.get(m, Fraction(0)) for m in columns]


def _poly(nvars: int, columns: Sequence[Monomial], vec: Sequence[Fraction]) -> SPolynomial:
    return SPolynomial.from_dict(nvars, dict(zip(columns, vec)))


def _base_relations(n: int, alternating: bool) -> List[SPolynomial]:
    nvars = n - 1
    if nvars < 1:
        return []

    def s(k: int) -> SPolynomial:
        return SPolynomial.constant(nvars) if k == 0 else SPolynomial.variable(nvars, k)

    top = s(nvars)
    if alternating:
        out = [s(k) - s(nvars - k) for k in range(1, (nvars + 1) // 2)]
        return out + [top - 1]
    # s_k s_(n-1) = s_(n-1-k); k = n-1 gives s_(n-1)^2 = 1
    return [s(k) * top - s(nvars - k) for k in range(1, nvars + 1)]


def generic_relations(n: int, degree_bound: int, alternating: bool = False) -> List[SPolynomial]:
    """Relations valid on all of ``Sym_n`` (``Alt_n`` with ``alternating=True``).

    Each base relation is multiplied by every monomial that keeps the total
    degree within ``degree_bound``.
    """
    nvars = n - 1
    out = []
    for rel in _base_relations(n, alternating):
        room = degree_bound - rel.total_degree
        if room < 0:
            continue
        for m in monomials_up_to(nvars, room):
            out.append(rel * SPolynomial.from_dict(nvars, {m: 1}))
    return out


@dataclass(frozen=True)
class KernelIdealBasis:
    """Degree-bounded piece of ``I(G)``.

    :param generators: independent polynomials vanishing on ``X(G)`` but not
        in the span of ``relations``
    :param relations: the generic ``Sym_n`` relations up to the same bound
    :param points: the class points of the group
    """

    group_name: str
    nvars: int
    degree_bound: int
    generators: Tuple[SPolynomial, ...]
    relations: Tuple[SPolynomial, ...]
    points: Tuple[ClassPoint, ...]

    def contains(self, p: SPolynomial) -> bool:
        """``p`` vanishes on ``X(G)`` and fits the degree bound."""
        if p.nvars != self.nvars or p.total_degree > self.degree_bound:
            return False
        return all(p.evaluate(pt) == 0 for pt in self.points)

    def in_span(self, p: SPolynomial) -> bool:
        columns = monomials_up_to(self.nvars, self.degree_bound)
        try:
            target = _vector(p, columns)
        except ValueError:
            return False
        rows = [_vector(q, columns) for q in self.relations + self.generators]
        return in_span(rows, target) if rows else not any(target)

    def has_generator(self, p: SPolynomial) -> bool:
        """Some generator equals ``p`` up to a nonzero rational factor."""
        if p.is_zero():
            return False
        lead_m, lead_c = p.terms[-1]
        for g in self.generators:
            c = g.as_dict().get(lead_m)
            if c and g * (lead_c / c) == p:
                return True
        return False

    def first_nonvanishing(self, point: ClassPoint) -> Optional[Tuple[SPolynomial, Fraction]]:
        for g in self.generators:
            value = g.evaluate(point)
            if value:
                return g, value
        return None


def kernel_ideal(G, degree_bound: Optional[int] = None) -> KernelIdealBasis:
    """Basis of the polynomials of total degree ``<= degree_bound`` vanishing on ``X(G)``.

    :raises ValueError: if ``degree_bound < 1``
    """
    bound = get_degree_bound() if degree_bound is None else degree_bound
    if bound < 1:
        raise ValueError("degree bound must be at least 1")
    n = G.degree
    nvars = n - 1
    points = tuple(f.point for f in class_points(G))
    columns = _descending(monomials_up_to(nvars, bound))

    evaluation = [[Fraction(monomial_value(m, pt)) for m in columns] for pt in points]
    vanishing = nullspace(evaluation, len(columns))

    relations = tuple(generic_relations(n, bound))
    rel_rows, rel_pivots = rref([_vector(r, columns) for r in relations])
    reduced = []
    for vec in vanishing:
        vec = list(vec)
        for row, p in zip(rel_rows, rel_pivots):
            if vec[p]:
                f = vec[p]
                vec = [a - f * b for a, b in zip(vec, row)]
        reduced.append(vec)
    gen_rows, _ = rref(reduced)
    generators = tuple(_poly(nvars, columns, row) for row in gen_rows)
    logger.info(
        "kernel ideal of %s up to degree %d: %d generators beyond %d generic relations",
        getattr(G, "name", "G"),
        bound,
        len(generators),
        len(relations),
    )
    return KernelIdealBasis(getattr(G, "name", "G"), nvars, bound, generators, relations, points)


def separating_witness(G, point: ClassPoint, degree_bound: Optional[int] = None) -> Optional[SPolynomial]:
    """A polynomial vanishing on ``X(G)`` but not at ``point``; ``None`` if ``point`` is in ``X(G)``.

    A kernel generator is preferred. When none works below the bound, the
    product of one separating linear form per class point is returned.
    """
    ideal = kernel_ideal(G, degree_bound)
    if point in ideal.points:
        return None
    hit = ideal.first_nonvanishing(point)
    if hit is not None:
        return hit[0]
    product = SPolynomial.constant(ideal.nvars)
    for q in ideal.points:
        k = next(i for i in range(1, ideal.nvars + 1) if q[i] != point[i])
        product = product * (SPolynomial.variable(ideal.nvars, k) - q[k])
    return product
