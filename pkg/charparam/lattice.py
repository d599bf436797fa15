# charparam/lattice.py
"""Virtual characters constant on cycle types, and small genuine bases of them.

A virtual character ``sum c_i chi_i`` of ``G`` is a polynomial in the
s-variables exactly when it takes one value on every fiber of
``Cl(G) -> Cl(Sym_n)``. Those coordinate vectors form a saturated lattice of
rank ``s(G)``; :func:`reduced_character_basis` picks a basis of it made of
genuine characters with the smallest possible norms.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from chartab import CharacterTable, CyclotomicNumber, character_table

from .branching import restriction_image_rank
from .classpoint import class_points
from .interpolation import interpolate_character
from .linalg import integer_kernel, is_primitive, rank
from .spoly import SPolynomial

logger = logging.getLogger(__name__)

DEFAULT_NORM_CAP = 64


@dataclass(frozen=True)
class VirtualCharacter:
    """Integer combination of irreducible characters.

    :param coordinates: multiplicity of each irreducible of ``table``
    :param values: class-function values, integers since the character is rational
    :param expression: the s-polynomial taking these values, when one exists
    """

    coordinates: Tuple[int, ...]
    values: Tuple[int, ...]
    expression: Optional[SPolynomial] = None

    @property
    def degree(self) -> int:
        return self.values[0]

    @property
    def norm(self) -> int:
        return sum(c * c for c in self.coordinates)

    def is_genuine(self) -> bool:
        return all(c >= 0 for c in self.coordinates)

    def label(self, names: Optional[Sequence[str]] = None) -> str:
        """``"chi1 + 2*chi4"`` style name over the irreducibles."""
        names = names or [f"chi{i}" for i in range(len(self.coordinates))]
        parts = []
        for name, c in zip(names, self.coordinates):
            if not c:
                continue
            body = name if abs(c) == 1 else f"{abs(c)}*{name}"
            parts.append(("- " if c < 0 else ("+ " if parts else "")) + body)
        return " ".join(parts) if parts else "0"


def virtual_character(T: CharacterTable, coordinates: Sequence[int], G=None) -> VirtualCharacter:
    """Build from coordinates; attaches an s-polynomial when ``G`` is given and one exists."""
    values = []
    for k in range(T.h):
        acc = CyclotomicNumber.rational(T.exponent, 0)
        for row, c in zip(T.characters, coordinates):
            if c:
                acc = acc + row[k] * c
        if not acc.is_integral_rational():
            raise ValueError(f"combination {list(coordinates)} is not rational on class {k}")
        values.append(int(acc.to_fraction()))
    expression = None
    if G is not None:
        try:
            expression = interpolate_character(values, G)
        except ValueError:
            expression = None
    return VirtualCharacter(tuple(int(c) for c in coordinates), tuple(values), expression)


def _fiber_constraints(G, T: CharacterTable) -> List[List[int]]:
    """One integer row per character: value differences across each fiber, as power-basis coordinates."""
    rows: List[List] = [[] for _ in range(T.h)]
    for fiber in class_points(G):
        first = fiber.classes[0]
        for other in fiber.classes[1:]:
            for i, chi in enumerate(T.characters):
                rows[i].extend((chi[other] - chi[first]).coordinates())
    denominators = [v.denominator for row in rows for v in row]
    scale = math.lcm(*denominators) if denominators else 1
    return [[int(v * scale) for v in row] for row in rows]


def restriction_lattice(G, T: Optional[CharacterTable] = None) -> Tuple[Tuple[int, ...], ...]:
    """Z-basis (coordinates over the irreducibles) of the virtual characters constant on fibers."""
    T = T or character_table(G)
    basis = integer_kernel(_fiber_constraints(G, T))
    expected = restriction_image_rank(G)
    if len(basis) != expected:
        raise ValueError(f"fiber lattice of {T.name} has rank {len(basis)}, expected {expected}")
    return tuple(tuple(v) for v in basis)


def _bounded_vectors(dim: int, budget: int) -> Iterator[Tuple[int, ...]]:
    """Nonnegative integer vectors of length ``dim`` with ``sum c_i^2 <= budget``."""
    if dim == 0:
        yield ()
        return
    for c in range(math.isqrt(budget) + 1):
        for rest in _bounded_vectors(dim - 1, budget - c * c):
            yield (c,) + rest


def reduced_character_basis(
    G,
    T: Optional[CharacterTable] = None,
    norm_cap: int = DEFAULT_NORM_CAP,
    with_expressions: bool = True,
) -> List[VirtualCharacter]:
    """Greedy genuine basis of the fiber lattice.

    Candidates are genuine characters in the lattice with ``<chi, chi> <= B``,
    taken in order of norm, then degree, then larger leading coordinates.
    One is kept when it raises the rank and the kept set stays primitive,
    so the result spans the whole saturated lattice. ``B`` grows from 1
    until the basis is complete or ``norm_cap`` is passed.

    With ``with_expressions=False`` the s-polynomials are not interpolated.
    """
    T = T or character_table(G)
    constraints = _fiber_constraints(G, T)
    degrees = T.degrees
    target = restriction_image_rank(G)

    def in_lattice(c: Tuple[int, ...]) -> bool:
        width = len(constraints[0]) if constraints else 0
        return all(sum(ci * constraints[i][t] for i, ci in enumerate(c) if ci) == 0 for t in range(width))

    for budget in range(1, norm_cap + 1):
        candidates = [c for c in _bounded_vectors(T.h, budget) if any(c) and in_lattice(c)]
        candidates.sort(key=lambda c: (sum(x * x for x in c), sum(x * d for x, d in zip(c, degrees)), tuple(-x for x in c)))
        chosen: List[Tuple[int, ...]] = []
        for c in candidates:
            trial = chosen + [c]
            if rank(trial) == len(trial) and is_primitive(trial):
                chosen = trial
                if len(chosen) == target:
                    break
        if len(chosen) == target:
            logger.info("reduced basis of %s found with norm bound %d", T.name, budget)
            return [virtual_character(T, c, G if with_expressions else None) for c in chosen]
        logger.debug("%s: norm bound %d gives only %d of %d basis vectors", T.name, budget, len(chosen), target)
    raise ValueError(f"no genuine basis of the fiber lattice of {T.name} with norms up to {norm_cap}")
