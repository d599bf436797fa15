# charparam/classpoint.py
"""Class points: coefficients of the standard-representation characteristic polynomial.

For a cycle type ``(d_1, ..., d_t)`` of degree ``n`` put
``P(x) = prod(x^d_i - 1)`` and ``S(x) = P(x) / (x - 1)``.  Writing
``S(x) = x^(n-1) - s_1 x^(n-2) + s_2 x^(n-3) - ... + (-1)^(n-1) s_(n-1)``
gives the class point ``(s_1, ..., s_(n-1))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Tuple

from polyarith import CycleType


@dataclass(frozen=True, order=True)
class ClassPoint:
    """Integer tuple ``(s_1, ..., s_(n-1))``; ``degree`` is ``n``."""

    svector: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.svector) + 1

    def __getitem__(self, k: int) -> int:
        """``s_k`` with 1-based ``k``."""
        if not 1 <= k <= len(self.svector):
            raise IndexError(f"s{k} does not exist in degree {self.degree}")
        return self.svector[k - 1]

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.svector) + ")"


@dataclass(frozen=True)
class PointFiber:
    """A distinct class point with the classes that map onto it.

    :param classes: class indices of the group sharing this cycle type
    :param size: total number of group elements in those classes
    """

    point: ClassPoint
    cycle_type: CycleType
    classes: Tuple[int, ...]
    size: int
    weight: Fraction


@lru_cache(maxsize=4096)
def s_vector(ct: CycleType) -> ClassPoint:
    """Class point of a cycle type, exact integer arithmetic."""
    # P(x), ascending coefficients
    prod = [1]
    for d in ct.parts:
        nxt = [0] * (len(prod) + d)
        for i, c in enumerate(prod):
            nxt[i] -= c
            nxt[i + d] += c
        prod = nxt
    # synthetic division by (x - 1), from the top
    n = ct.degree
    quotient = [0] * n
    carry = 0
    for i in range(n, 0, -1):
        carry = prod[i] + carry
        quotient[i - 1] = carry
    # quotient[j] is the coefficient of x^j in S(x)
    return ClassPoint(tuple((-1) ** k * quotient[n - 1 - k] for k in range(1, n)))


def class_points(G) -> List[PointFiber]:
    """Distinct class points of a group in class order, with fibers and weights.

    Works for :class:`permcore.PermGroup` and :class:`permcore.ImportedGroup`.
    """
    fibers: dict[CycleType, list[int]] = {}
    for idx, ct in enumerate(G.cycle_types):
        fibers.setdefault(ct, []).append(idx)
    sizes = G.class_sizes
    out = []
    for ct, members in fibers.items():
        size = sum(sizes[i] for i in members)
        out.append(PointFiber(s_vector(ct), ct, tuple(members), size, Fraction(size, G.order)))
    return out


def fiber_of_class(G) -> Tuple[int, ...]:
    """For each class index, the position of its fiber in :func:`class_points`."""
    owner = {}
    for f_idx, fiber in enumerate(class_points(G)):
        for k in fiber.classes:
            owner[k] = f_idx
    return tuple(owner[k] for k in range(len(G.cycle_types)))


def partitions(n: int, largest: int | None = None) -> Iterable[Tuple[int, ...]]:
    """All partitions of ``n`` as descending tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def all_class_points(n: int) -> List[ClassPoint]:
    """``X(Sym_n)``: the class points of every partition of ``n``, sorted by cycle type."""
    return [s_vector(ct) for ct in sorted(CycleType.of(p) for p in partitions(n))]
