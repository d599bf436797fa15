# frobstats/kronecker.py
"""Quadratic characters ``p -> (d/p)`` of quadratic fields of discriminant ``d``."""

from __future__ import annotations

from dataclasses import dataclass

import sympy
from sympy.ntheory import jacobi_symbol


class DiscriminantError(ValueError):
    """Raised when ``d`` is not the discriminant of a quadratic field."""


def _squarefree(m: int) -> bool:
    return m != 0 and all(e == 1 for e in sympy.factorint(abs(m)).values())


def is_fundamental_discriminant(d: int) -> bool:
    """``d != 1`` and either ``d = 1 mod 4`` squarefree, or ``d = 4m`` with ``m = 2, 3 mod 4`` squarefree."""
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return _squarefree(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def kronecker_symbol(d: int, p: int) -> int:
    """``(d/p)`` for a prime ``p``: 0 when ``p`` ramifies, else +-1 by splitting."""
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        if d % 2 == 0:
            return 0
        return 1 if d % 8 in (1, 7) else -1
    return int(jacobi_symbol(d % p, p))


@dataclass(frozen=True)
class KroneckerCharacter:
    """The linear character of ``Gal(Q(sqrt d)/Q)`` read at Frobenius elements."""

    discriminant: int

    def __post_init__(self):
        if not is_fundamental_discriminant(self.discriminant):
            raise DiscriminantError(f"{self.discriminant} is not a fundamental discriminant")

    def __call__(self, p: int) -> int:
        return kronecker_symbol(self.discriminant, p)

    @property
    def label(self) -> str:
        return f"kron({self.discriminant})"


def kronecker_character(d: KroneckerCharacter | int, p: int) -> int:
    character = d if isinstance(d, KroneckerCharacter) else KroneckerCharacter(int(d))
    return character(p)
