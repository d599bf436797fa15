# permcore/group.py
"""Enumerated permutation groups with conjugacy classes and power maps.

Groups are closed breadth-first from their generators and kept as a sorted
tuple of elements, so every derived structure (class order, representatives)
is reproducible across runs and platforms.
"""

from __future__ import annotations

import json
import logging
import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from polyarith import CycleType
from utilities.config import get_enumeration_cap

from .permutation import (
    Permutation,
    PermutationError,
    compose,
    conjugate,
    cycle_type,
    identity,
    parse_permutation,
    power,
)

logger = logging.getLogger(__name__)


class GroupTooLargeError(RuntimeError):
    """Raised when closing a group would exceed the enumeration cap."""

    def __init__(self, cap: int, name: str = ""):
        label = f" {name}" if name else ""
        super().__init__(
            f"group{label} has more than {cap} elements; supply its class data in import mode"
        )
        self.cap = cap


@dataclass(frozen=True)
class ConjClass:
    """One conjugacy class.

    :param index: position in the canonical class order (0 is the identity)
    :param representative: least element of the class as an image tuple
    :param size: number of elements
    :param cycle_type: common cycle type of the members
    """

    index: int
    representative: Permutation
    size: int
    cycle_type: CycleType

    @property
    def element_order(self) -> int:
        return self.cycle_type.order


class PermGroup:
    """Finite permutation group with all elements enumerated.

    Instances are immutable once built; use :func:`close_group`.
    """

    def __init__(
        self,
        name: str,
        degree: int,
        generators: Sequence[Permutation],
        elements: Sequence[Permutation],
    ):
        self.name = name
        self.degree = degree
        self.generators: Tuple[Permutation, ...] = tuple(generators)
        self.elements: Tuple[Permutation, ...] = tuple(sorted(elements))
        self._element_set = frozenset(self.elements)
        self._power_cache: Dict[Tuple[int, int], int] = {}

    def __repr__(self) -> str:
        return f"PermGroup({self.name!r}, degree={self.degree}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in self._element_set

    @cached_property
    def _classes_and_lookup(self) -> Tuple[Tuple[ConjClass, ...], Dict[Permutation, int]]:
        orbits: List[List[Permutation]] = []
        seen: set = set()
        for g in self.elements:
            if g in seen:
                continue
            orbit = [g]
            seen.add(g)
            queue = deque([g])
            while queue:
                y = queue.popleft()
                for x in self.generators:
                    z = conjugate(y, x)
                    if z not in seen:
                        seen.add(z)
                        orbit.append(z)
                        queue.append(z)
            orbits.append(orbit)

        keyed = sorted(
            ((cycle_type(min(o)), len(o), min(o)), o) for o in orbits
        )
        classes = []
        lookup: Dict[Permutation, int] = {}
        for idx, ((ct, size, rep), members) in enumerate(keyed):
            classes.append(ConjClass(index=idx, representative=rep, size=size, cycle_type=ct))
            for m in members:
                lookup[m] = idx
        logger.debug("%s: %d conjugacy classes", self.name, len(classes))
        return tuple(classes), lookup

    @property
    def classes(self) -> Tuple[ConjClass, ...]:
        return self._classes_and_lookup[0]

    @property
    def class_sizes(self) -> Tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    @property
    def cycle_types(self) -> Tuple[CycleType, ...]:
        return tuple(c.cycle_type for c in self.classes)

    def class_index_of(self, g: Permutation) -> int:
        try:
            return self._classes_and_lookup[1][tuple(g)]
        except KeyError as exc:
            raise PermutationError(f"element {g!r} is not in {self.name}") from exc

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(c.element_order for c in self.classes))

    def power_map(self, k: int, e: int) -> int:
        """Index of the class containing ``rep_k^e``."""
        if not 0 <= k < len(self.classes):
            raise IndexError(f"class index {k} out of range for {self.name}")
        if e < 0:
            raise ValueError("power_map exponent must be non-negative")
        rep = self.classes[k]
        e %= rep.element_order
        key = (k, e)
        if key not in self._power_cache:
            self._power_cache[key] = self.class_index_of(power(rep.representative, e))
        return self._power_cache[key]

    def inverse_class(self, k: int) -> int:
        return self.power_map(k, self.classes[k].element_order - 1)

    def haar_weights(self) -> Tuple[Fraction, ...]:
        return haar_weights(self)


def close_group(
    generators: Iterable[Permutation],
    cap: Optional[int] = None,
    name: str = "",
    degree: Optional[int] = None,
) -> PermGroup:
    """Enumerate ``<generators>`` breadth-first.

    :param cap: maximum order allowed, ``FROBCHAR_ENUMERATION_CAP`` by default
    :raises GroupTooLargeError: when more than ``cap`` elements appear
    :raises PermutationError: when generators disagree on the degree
    """
    gens = [tuple(g) for g in generators]
    if degree is None:
        if not gens:
            raise PermutationError("need a degree or at least one generator")
        degree = len(gens[0])
    if any(len(g) != degree for g in gens):
        raise PermutationError("all generators must share one degree")
    cap = get_enumeration_cap() if cap is None else cap
    if cap < 1:
        raise ValueError("enumeration cap must be at least 1")

    one = identity(degree)
    elements = {one}
    queue = deque([one])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(s, g)
            if h not in elements:
                elements.add(h)
                if len(elements) > cap:
                    raise GroupTooLargeError(cap, name)
                queue.append(h)
    logger.info("closed group %s of degree %d and order %d", name or "<anonymous>", degree, len(elements))
    return PermGroup(name or "G", degree, gens, elements)


def group_from_cycles(name: str, degree: int, generators: Sequence[str], cap: Optional[int] = None) -> PermGroup:
    return close_group(
        [parse_permutation(text, degree) for text in generators], cap=cap, name=name, degree=degree
    )


def load_group_file(path, cap: Optional[int] = None) -> PermGroup:
    """Group from a JSON file ``{"name": ..., "degree": n, "generators": ["(1,2,3)", ...]}``.

    :raises PermutationError: for unreadable or malformed files
    """
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        name, degree, generators = str(data["name"]), int(data["degree"]), list(data["generators"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise PermutationError(f"cannot read group file {path}: {exc}") from exc
    G = group_from_cycles(name, degree, generators, cap=cap)
    expected = data.get("order")
    if expected is not None and G.order != int(expected):
        raise PermutationError(f"{name} closed to order {G.order}, the file says {expected}")
    return G


def conjugacy_classes(G: PermGroup) -> Tuple[ConjClass, ...]:
    return G.classes


def haar_weights(G) -> Tuple[Fraction, ...]:
    """``|C_k| / |G|`` per class; works for enumerated and imported groups."""
    return tuple(Fraction(size, G.order) for size in G.class_sizes)


def power_map(G: PermGroup, k: int, e: int) -> int:
    return G.power_map(k, e)


def class_map_to_sym(G) -> Tuple[CycleType, ...]:
    """Cycle type of each class, i.e. the induced map ``Cl(G) -> Cl(Sym_n)``."""
    return tuple(G.cycle_types)


def aggregated_weights(G) -> Dict[CycleType, Fraction]:
    """Haar weights pushed forward to cycle types, keyed in class order."""
    out: Dict[CycleType, Fraction] = {}
    for ct, w in zip(G.cycle_types, haar_weights(G)):
        out[ct] = out.get(ct, Fraction(0)) + w
    return out


def is_subgroup(H: PermGroup, G: PermGroup) -> bool:
    return H.degree == G.degree and all(g in G for g in H.generators)


def class_fusion(H: PermGroup, G: PermGroup) -> Tuple[int, ...]:
    """For each class of ``H``, the index of the ``G``-class containing it.

    :raises PermutationError: if some representative of ``H`` is not in ``G``
    """
    if H.degree != G.degree:
        raise PermutationError(f"{H.name} and {G.name} act on different degrees")
    return tuple(G.class_index_of(c.representative) for c in H.classes)
