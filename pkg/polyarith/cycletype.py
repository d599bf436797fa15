# polyarith/cycletype.py
"""Cycle types: partitions of ``n`` shared by permutations and factorization patterns."""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Tuple


@dataclass(frozen=True, order=True)
class CycleType:
    """Multiset of cycle lengths, stored ascending.

    The ordering used by ``sorted`` is the lexicographic order on ``parts``,
    which is the order conjugacy classes are listed in.

    :param parts: positive integers ``d_1 <= ... <= d_t``
    """

    parts: Tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("a cycle type needs at least one part")
        if any((not isinstance(d, int)) or d < 1 for d in self.parts):
            raise ValueError(f"cycle type parts must be positive integers: {self.parts!r}")
        if tuple(sorted(self.parts)) != self.parts:
            object.__setattr__(self, "parts", tuple(sorted(self.parts)))

    @classmethod
    def of(cls, lengths: Iterable[int]) -> "CycleType":
        return cls(tuple(sorted(int(d) for d in lengths)))

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        """Read ``"1^2 2^1"``, ``"1 1 2"`` or a JSON list ``"[1,1,2]"``."""
        text = text.strip()
        if text.startswith("["):
            return cls.of(json.loads(text))
        parts = []
        for token in text.replace(",", " ").split():
            base, _, exp = token.partition("^")
            parts.extend([int(base)] * (int(exp) if exp else 1))
        return cls.of(parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def order(self) -> int:
        """Order of any permutation with this cycle type."""
        return math.lcm(*self.parts)

    @property
    def sign(self) -> int:
        return -1 if sum(d - 1 for d in self.parts) % 2 else 1

    def exponents(self) -> Tuple[Tuple[int, int], ...]:
        """``((m_1, e_1), ...)`` for the formal product ``m_1^e_1 ... m_s^e_s``."""
        return tuple(sorted(Counter(self.parts).items()))

    def __str__(self) -> str:
        return " ".join(f"{m}^{e}" for m, e in self.exponents())
