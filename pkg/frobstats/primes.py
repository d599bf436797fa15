# frobstats/primes.py
"""Deterministic prime streams.

Primes come from a segmented sieve over ``[low, high)`` windows. Only odd
numbers are stored in a segment, and the base primes up to ``sqrt(high)`` are
cached between windows.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterator, List

import numpy as np

SEGMENT = 1 << 16


@lru_cache(maxsize=32)
def _base_primes(limit: int) -> np.ndarray:
    """Primes ``<= limit`` by the plain sieve of Eratosthenes."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p : limit + 1 : p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def primes_between(low: int, high: int) -> List[int]:
    """All primes ``p`` with ``low <= p < high``, ascending."""
    low = max(low, 2)
    if high <= low:
        return []
    out = [2] if low == 2 else []
    lo = low | 1 if low > 2 else 3
    if lo >= high:
        return out
    odd_count = (high - lo + 1) // 2
    mask = np.ones(odd_count, dtype=bool)
    # next power of two keeps the cache small across windows
    base = _base_primes(1 << math.isqrt(high - 1).bit_length())
    for p in base[1:]:
        p = int(p)
        sq = p * p
        if sq >= high:
            break
        start = max(sq, ((lo + p - 1) // p) * p)
        if start % 2 == 0:
            start += p
        if start >= high:
            continue
        mask[(start - lo) // 2 :: p] = False
    idx = np.flatnonzero(mask)
    out.extend(int(lo + 2 * i) for i in idx)
    return out


def iter_primes(start: int = 2) -> Iterator[int]:
    """Endless ascending stream of primes ``>= start``."""
    low = max(start, 2)
    while True:
        high = low + SEGMENT
        yield from primes_between(low, high)
        low = high


def unramified_primes(modulus: int, count: int, start: int = 2) -> tuple[list[int], list[int]]:
    """The first ``count`` primes ``>= start`` not dividing ``modulus``.

    :returns: ``(primes, skipped)`` where ``skipped`` lists the divisors of
        ``modulus`` passed over on the way
    """
    if count < 1:
        raise ValueError("prime count must be at least 1")
    if modulus == 0:
        raise ValueError("modulus 0: every prime is bad")
    taken: list[int] = []
    skipped: list[int] = []
    for p in iter_primes(start):
        if modulus % p == 0:
            skipped.append(p)
            continue
        taken.append(p)
        if len(taken) == count:
            break
    return taken, skipped
