# charparam/branching.py
"""Restriction of characters along ``H <= G`` and of s-polynomials to a group."""

from __future__ import annotations

import logging
import math
from typing import Optional, Sequence, Tuple

from chartab import CharacterTable, CharacterTableError, CyclotomicNumber, inner_product
from permcore import PermutationError, class_fusion

from .classpoint import class_points, s_vector
from .spoly import SPolynomial

logger = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]


class ClassMapError(ValueError):
    """Raised when the classes of a subgroup cannot be matched with classes of the group."""


def _fusion(T_G: CharacterTable, T_H: CharacterTable, class_map: Optional[Sequence[int]]) -> Tuple[int, ...]:
    if class_map is not None:
        fused = tuple(int(k) for k in class_map)
        if len(fused) != T_H.h or any(not 0 <= k < T_G.h for k in fused):
            raise ClassMapError(f"class map {list(fused)} does not send {T_H.h} classes into {T_G.h}")
    elif T_G.group is None or T_H.group is None:
        raise ClassMapError("imported tables need an explicit class map")
    else:
        try:
            fused = class_fusion(T_H.group, T_G.group)
        except PermutationError as exc:
            raise ClassMapError(f"{T_H.name} is not contained in {T_G.name}: {exc}") from exc
    for k, target in enumerate(fused):
        if T_H.cycle_types[k] != T_G.cycle_types[target]:
            raise ClassMapError(
                f"class {k} of {T_H.name} has cycle type {T_H.cycle_types[k]}, "
                f"its image in {T_G.name} has {T_G.cycle_types[target]}"
            )
    return fused


def restriction_matrix(
    T_G: CharacterTable, T_H: CharacterTable, class_map: Optional[Sequence[int]] = None
) -> IntMatrix:
    """Branching rules: row ``i`` holds the multiplicities of ``Res chi_i`` over the irreducibles of ``H``.

    :param class_map: ``Cl(H) -> Cl(G)`` as class indices; computed by
        conjugacy testing of representatives when both tables carry their groups
    :raises ClassMapError: when the class map is missing or inconsistent
    """
    fused = _fusion(T_G, T_H, class_map)
    m = math.lcm(T_G.exponent, T_H.exponent)
    wide = CharacterTable(
        name=T_H.name,
        order=T_H.order,
        exponent=m,
        class_sizes=T_H.class_sizes,
        cycle_types=T_H.cycle_types,
        characters=tuple(tuple(v.embed(m) for v in row) for row in T_H.characters),
    )
    rows = []
    for i, chi in enumerate(T_G.characters):
        restricted = [chi[fused[k]].embed(m) for k in range(T_H.h)]
        coords = []
        for psi in wide.characters:
            ip = inner_product(wide, restricted, psi)
            if not ip.is_integral_rational() or ip.to_fraction() < 0:
                raise CharacterTableError(f"restriction of character {i} of {T_G.name} has multiplicity {ip}")
            coords.append(int(ip.to_fraction()))
        rows.append(tuple(coords))
    logger.debug("restriction %s -> %s through class map %s", T_G.name, T_H.name, fused)
    return tuple(rows)


def spolynomial_values(p: SPolynomial, G) -> Tuple[int, ...]:
    """Values of ``p`` on the classes of ``G``; they must be integers for a character."""
    out = []
    for ct in G.cycle_types:
        value = p.evaluate(s_vector(ct))
        if value.denominator != 1:
            raise CharacterTableError(f"{p} takes the non-integral value {value} on cycle type {ct}")
        out.append(int(value))
    return tuple(out)


def spolynomial_coordinates(p: SPolynomial, T: CharacterTable) -> Tuple[int, ...]:
    """Multiplicities of the irreducibles of ``T`` in the class function ``p``."""
    values = spolynomial_values(p, T)
    return T.decompose([CyclotomicNumber.rational(T.exponent, v) for v in values])


def restriction_image_rank(G) -> int:
    """``s(G)``: the number of distinct class points, the rank of the image of ``R(Sym_n)``."""
    return len(class_points(G))
