# frobstats/sampling.py
"""Frobenius data at primes: factorization types and class points.

A sample is a list of entries, one per prime, each carrying the cycle type
and class point of every polynomial taking part. Joint samples skip a prime
that is bad for any of their polynomials, so all sources stay aligned.

Work is split into contiguous prime chunks; with several workers the chunks
go to a process pool and are merged back in prime order.
"""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from charparam.classpoint import ClassPoint, s_vector
from polyarith import CycleType, IntPolynomial, PolynomialError, bad_prime_modulus, factorization_type
from utilities.config import get_workers

from .primes import unramified_primes

logger = logging.getLogger(__name__)

CHUNK = 256


@dataclass(frozen=True)
class SampleEntry:
    """Frobenius data at one prime.

    :param prime: the prime, or 0 for an entry of an exact Haar sample
    :param cycle_types: factorization type of each source polynomial
    :param points: class point of each cycle type
    :param weight: multiplicity; 1 for primes, ``|C_k|`` for Haar entries
    :param classes: class index per source, known only for Haar entries
    """

    prime: int
    cycle_types: Tuple[CycleType, ...]
    points: Tuple[ClassPoint, ...]
    weight: int = 1
    classes: Optional[Tuple[int, ...]] = None

    @property
    def cycle_type(self) -> CycleType:
        return self.cycle_types[0]

    @property
    def point(self) -> ClassPoint:
        return self.points[0]


@dataclass(frozen=True)
class PrimeSample:
    """Ordered Frobenius data.

    :param polynomials: source polynomials; empty for a Haar sample
    :param entries: ascending by prime
    :param skipped: bad primes passed over between ``start`` and the last prime
    :param label: group name for a Haar sample
    """

    polynomials: Tuple[IntPolynomial, ...]
    entries: Tuple[SampleEntry, ...]
    skipped: Tuple[int, ...] = ()
    label: str = ""

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(pt.degree for pt in self.entries[0].points) if self.entries else ()

    @property
    def total_weight(self) -> int:
        return sum(e.weight for e in self.entries)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(e.prime for e in self.entries)

    def is_exact(self) -> bool:
        return not self.polynomials

    def prefix(self, count: int) -> "PrimeSample":
        """The first ``count`` entries, with the skipped primes below them."""
        entries = self.entries[:count]
        top = entries[-1].prime if entries else 0
        return PrimeSample(
            self.polynomials, entries, tuple(p for p in self.skipped if p < top), self.label
        )


def _types_for_chunk(coefficients: Tuple[Tuple[int, ...], ...], primes: Sequence[int]) -> List[Tuple[CycleType, ...]]:
    polys = [IntPolynomial(c) for c in coefficients]
    return [tuple(factorization_type(f, p) for f in polys) for p in primes]


def _factor_all(polys: Sequence[IntPolynomial], primes: List[int], workers: int) -> List[Tuple[CycleType, ...]]:
    coefficients = tuple(f.coefficients for f in polys)
    chunks = [primes[i : i + CHUNK] for i in range(0, len(primes), CHUNK)]
    if workers <= 1 or len(chunks) <= 1:
        return [t for chunk in chunks for t in _types_for_chunk(coefficients, chunk)]
    logger.info("factoring %d primes in %d chunks on %d workers", len(primes), len(chunks), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_types_for_chunk, [coefficients] * len(chunks), chunks)
        return [t for part in parts for t in part]


def sample_joint(
    polys: Sequence[IntPolynomial],
    count: int,
    start: int = 2,
    workers: Optional[int] = None,
    also_skip: int = 1,
) -> PrimeSample:
    """First ``count`` primes ``>= start`` good for every polynomial, with their types.

    :param also_skip: primes dividing this number are skipped as well

    :raises ValueError: if ``count < 1`` or no polynomials are given
    :raises PolynomialError: for a polynomial with zero discriminant
    """
    if not polys:
        raise ValueError("need at least one polynomial to sample")
    if count < 1:
        raise ValueError("prime count must be at least 1")
    workers = get_workers() if workers is None else workers
    moduli = [bad_prime_modulus(f) for f in polys]
    for f, m in zip(polys, moduli):
        if m == 0:
            raise PolynomialError(f"{f} has a repeated root; every prime would be skipped")
    modulus = lcm(*moduli, abs(also_skip) or 1)
    primes, skipped = unramified_primes(modulus, count, start)
    types = _factor_all(polys, primes, workers)
    entries = tuple(
        SampleEntry(p, cts, tuple(s_vector(ct) for ct in cts)) for p, cts in zip(primes, types)
    )
    logger.info(
        "sampled %d primes in [%d, %d], skipped %s", len(entries), primes[0], primes[-1], skipped or "none"
    )
    return PrimeSample(tuple(polys), entries, tuple(skipped))


def sample_primes(f: IntPolynomial, count: int, start: int = 2, workers: Optional[int] = None) -> PrimeSample:
    """First ``count`` unramified primes ``>= start`` mapped to factorization types and class points."""
    return sample_joint([f], count, start, workers)


def haar_sample(G) -> PrimeSample:
    """Exact pseudo-sample: one entry per class of ``G`` with weight ``|C_k|``.

    Averages over it are the Haar expectations, the limit of averages over primes.
    """
    entries = tuple(
        SampleEntry(0, (ct,), (s_vector(ct),), size, (k,))
        for k, (ct, size) in enumerate(zip(G.cycle_types, G.class_sizes))
    )
    return PrimeSample((), entries, (), getattr(G, "name", "G"))


def cycle_type_frequencies(sample: PrimeSample, source: int = 0) -> Dict[CycleType, Fraction]:
    """Weighted share of each factorization type, sorted by cycle type."""
    tally: Counter = Counter()
    for e in sample.entries:
        tally[e.cycle_types[source]] += e.weight
    total = sample.total_weight
    return {ct: Fraction(tally[ct], total) for ct in sorted(tally)}
