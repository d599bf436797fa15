# permcore/permutation.py
"""Permutations as image tuples.

Internally a permutation of degree ``n`` is a tuple ``g`` of 0-based images,
``g[i]`` being the image of point ``i``. Text uses 1-based disjoint cycles,
``"(1,2,3)(4,5)"`` or ``"(1 2 3)(4 5)"``, parsed and printed through
:class:`sympy.combinatorics.Permutation`.
"""

from __future__ import annotations

import re
from typing import Sequence, Tuple

from sympy.combinatorics import Permutation as SymPermutation

from polyarith import CycleType

Permutation = Tuple[int, ...]

_CYCLE = re.compile(r"\(([^()]*)\)")


class PermutationError(ValueError):
    """Raised for malformed permutation text or mismatched degrees."""


def identity(n: int) -> Permutation:
    return tuple(range(n))


def from_images(images: Sequence[int]) -> Permutation:
    """Build from 1-based images ``(g(1), ..., g(n))``."""
    g = tuple(int(i) - 1 for i in images)
    if sorted(g) != list(range(len(g))):
        raise PermutationError(f"not a bijection of 1..{len(g)}: {list(images)!r}")
    return g


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation with 1-based points.

    :raises PermutationError: on bad syntax, repeated points or points outside ``1..degree``
    """
    stripped = text.strip()
    if _CYCLE.sub("", stripped).strip():
        raise PermutationError(f"unexpected characters in {text!r}")
    cycles = []
    seen: set[int] = set()
    for body in _CYCLE.findall(stripped):
        points = [int(tok) for tok in re.split(r"[\s,]+", body.strip()) if tok]
        for pt in points:
            if pt < 1 or pt > degree:
                raise PermutationError(f"point {pt} outside 1..{degree} in {text!r}")
            if pt in seen:
                raise PermutationError(f"point {pt} repeated in {text!r}")
            seen.add(pt)
        if len(points) > 1:
            cycles.append([pt - 1 for pt in points])
    if not cycles:
        return identity(degree)
    return tuple(SymPermutation(cycles, size=degree).array_form)


def format_permutation(g: Permutation) -> str:
    cyclic = SymPermutation(list(g)).cyclic_form
    if not cyclic:
        return "()"
    return "".join("(" + ",".join(str(pt + 1) for pt in cyc) + ")" for cyc in cyclic)


def compose(g: Permutation, h: Permutation) -> Permutation:
    """``g∘h``: apply ``h`` first, then ``g``."""
    return tuple(g[i] for i in h)


def inverse(g: Permutation) -> Permutation:
    inv = [0] * len(g)
    for i, gi in enumerate(g):
        inv[gi] = i
    return tuple(inv)


def conjugate(g: Permutation, x: Permutation) -> Permutation:
    """``x g x^-1``."""
    # (x g x^-1)(x(i)) = x(g(i))
    out = [0] * len(g)
    for i, gi in enumerate(g):
        out[x[i]] = x[gi]
    return tuple(out)


def power(g: Permutation, e: int) -> Permutation:
    if e < 0:
        return power(inverse(g), -e)
    result = identity(len(g))
    base = g
    while e:
        if e & 1:
            result = compose(base, result)
        base = compose(base, base)
        e >>= 1
    return result


def cycle_lengths(g: Permutation) -> list[int]:
    seen = [False] * len(g)
    lengths = []
    for start in range(len(g)):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = g[i]
            length += 1
        lengths.append(length)
    return lengths


def cycle_type(g: Permutation) -> CycleType:
    """Orbit lengths of ``g`` on ``{1..n}``, ascending."""
    return CycleType.of(cycle_lengths(g))


def order(g: Permutation) -> int:
    return cycle_type(g).order
