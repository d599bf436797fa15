# chartab/table.py
"""Character tables, orthogonality checks, Galois orbits and rational tables."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

from polyarith import CycleType

from .cyclotomic import CyclotomicNumber

logger = logging.getLogger(__name__)


class CharacterTableError(RuntimeError):
    """Raised when a table fails verification or cannot be computed."""


@dataclass(frozen=True)
class CharacterTable:
    """Irreducible characters of a group, rows indexed by character, columns by class.

    :param name: group name
    :param order: ``|G|``
    :param exponent: ``m``; every value lies in ``Q(zeta_m)``
    :param class_sizes: ``|C_k|`` in class order
    :param cycle_types: cycle type of each class
    :param characters: ``h x h`` values
    :param group: the enumerated group when available (supplies power maps)
    """

    name: str
    order: int
    exponent: int
    class_sizes: Tuple[int, ...]
    cycle_types: Tuple[CycleType, ...]
    characters: Tuple[Tuple[CyclotomicNumber, ...], ...]
    group: Optional[Any] = field(default=None, compare=False, repr=False)

    @property
    def h(self) -> int:
        return len(self.class_sizes)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(int(row[0].to_fraction()) for row in self.characters)

    @property
    def weights(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(s, self.order) for s in self.class_sizes)

    def inner_product(self, u: Sequence[CyclotomicNumber], v: Sequence[CyclotomicNumber]) -> CyclotomicNumber:
        return inner_product(self, u, v)

    def decompose(self, values: Sequence[CyclotomicNumber]) -> Tuple[int, ...]:
        return decompose(self, values)


@dataclass(frozen=True)
class RationalCharacterTable:
    """Galois-orbit sums of irreducible characters.

    :param rows: integer values per class
    :param orbit_sizes: ``<row, row>`` for each row
    :param orbits: indices into the irreducible table (empty for imported tables)
    """

    name: str
    order: int
    class_sizes: Tuple[int, ...]
    cycle_types: Tuple[CycleType, ...]
    rows: Tuple[Tuple[int, ...], ...]
    orbit_sizes: Tuple[int, ...]
    orbits: Tuple[Tuple[int, ...], ...] = ()

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def weights(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(s, self.order) for s in self.class_sizes)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(row[0] for row in self.rows)

    def gram(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """``A D A^t``; diagonal with the orbit sizes for a valid table."""
        w = self.weights
        return tuple(
            tuple(sum((wk * a * b for wk, a, b in zip(w, u, v)), Fraction(0)) for v in self.rows)
            for u in self.rows
        )


def inner_product(T: CharacterTable, u: Sequence[CyclotomicNumber], v: Sequence[CyclotomicNumber]) -> CyclotomicNumber:
    """``sum_k (|C_k|/|G|) u(C_k) conj(v(C_k))``."""
    acc = CyclotomicNumber.rational(T.exponent, 0)
    for w, a, b in zip(T.weights, u, v):
        acc = acc + a * b.conjugate() * w
    return acc


def verify_orthogonality(T: CharacterTable) -> bool:
    """True iff ``A D A^dagger = I`` holds exactly."""
    rows = T.characters
    if len(rows) != T.h or any(len(r) != T.h for r in rows):
        return False
    one = CyclotomicNumber.rational(T.exponent, 1)
    zero = CyclotomicNumber.rational(T.exponent, 0)
    for i, u in enumerate(rows):
        for j in range(i, len(rows)):
            if inner_product(T, u, rows[j]) != (one if i == j else zero):
                return False
    return True


def column_orthogonality(T: CharacterTable) -> bool:
    """``sum_i chi_i(C_j) conj(chi_i(C_k)) = delta_jk |G|/|C_j|`` for all ``j, k``."""
    cols = list(zip(*T.characters))
    for j in range(T.h):
        for k in range(j, T.h):
            acc = CyclotomicNumber.rational(T.exponent, 0)
            for a, b in zip(cols[j], cols[k]):
                acc = acc + a * b.conjugate()
            expected = Fraction(T.order, T.class_sizes[j]) if j == k else Fraction(0)
            if acc != CyclotomicNumber.rational(T.exponent, expected):
                return False
    return True


def decompose(T: CharacterTable, values: Sequence[CyclotomicNumber]) -> Tuple[int, ...]:
    """Integer coordinates of a class function over the irreducibles.

    :raises CharacterTableError: if some multiplicity is not a rational integer
    """
    coords = []
    for row in T.characters:
        ip = inner_product(T, values, row)
        if not ip.is_integral_rational():
            raise CharacterTableError(f"class function is not a virtual character of {T.name}: {ip}")
        coords.append(int(ip.to_fraction()))
    return tuple(coords)


def _units(m: int) -> List[int]:
    return [k for k in range(1, max(m, 2)) if math.gcd(k, m) == 1]


def galois_orbits(T: CharacterTable) -> Tuple[Tuple[int, ...], ...]:
    """Orbits of character indices under ``chi^sigma(k)(C) = chi(C^k)``.

    With an enumerated group the class power maps are used; an imported
    table falls back to applying ``z -> z^k`` to its values.
    """
    index = {row: i for i, row in enumerate(T.characters)}
    parent = list(range(T.h))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for k in _units(T.exponent):
        for i, row in enumerate(T.characters):
            if T.group is not None:
                image = tuple(row[T.group.power_map(c, k)] for c in range(T.h))
            else:
                image = tuple(v.galois(k) for v in row)
            j = index.get(image)
            if j is None:
                raise CharacterTableError(f"Galois image of character {i} is not in the table of {T.name}")
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)

    groups: dict[int, list[int]] = {}
    for i in range(T.h):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(members) for _, members in sorted(groups.items()))


def rational_character_table(T: CharacterTable) -> RationalCharacterTable:
    """One integer row per Galois orbit, by ascending degree, then larger values first."""
    summed_rows = []
    for orbit in galois_orbits(T):
        summed = [CyclotomicNumber.rational(T.exponent, 0)] * T.h
        for i in orbit:
            summed = [a + b for a, b in zip(summed, T.characters[i])]
        if not all(v.is_integral_rational() for v in summed):
            raise CharacterTableError(f"orbit sum {orbit} of {T.name} is not integer valued")
        summed_rows.append((tuple(int(v.to_fraction()) for v in summed), orbit))
    summed_rows.sort(key=lambda t: (t[0][0], tuple(-v for v in t[0])))
    rows = [row for row, _ in summed_rows]
    orbits = tuple(orbit for _, orbit in summed_rows)
    table = RationalCharacterTable(
        name=T.name,
        order=T.order,
        class_sizes=T.class_sizes,
        cycle_types=T.cycle_types,
        rows=tuple(rows),
        orbit_sizes=tuple(len(o) for o in orbits),
        orbits=orbits,
    )
    logger.debug("%s: h=%d, r=%d", T.name, T.h, table.r)
    return table


def verify_rational_table(R: RationalCharacterTable) -> Tuple[bool, Fraction]:
    """Check ``A D A^t`` is diagonal with the declared orbit sizes.

    :returns: ``(ok, max absolute deviation)``
    """
    gram = R.gram()
    worst = Fraction(0)
    for i, row in enumerate(gram):
        for j, value in enumerate(row):
            target = R.orbit_sizes[i] if i == j else 0
            worst = max(worst, abs(value - target))
    return worst == 0, worst
