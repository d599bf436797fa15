# frobstats/identify.py
"""Ranking candidate Galois groups against Frobenius data.

Each candidate is first tested for exclusion: a sampled class point outside
``X(G)`` rules ``G`` out, and the witness records a kernel polynomial that
vanishes on ``X(G)`` but not at that point. Surviving candidates are compared
through the Gram matrix of their reduced character basis.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from charparam import SPolynomial, class_points, kernel_ideal, separating_witness
from permcore import aggregated_weights
from polyarith import IntPolynomial

from .basis import reduced_basis
from .gram import STABLE_THRESHOLD, gram_report
from .sampling import PrimeSample, sample_primes

logger = logging.getLogger(__name__)

DEFAULT_IDENTIFY_PRIMES = 1024

EXCLUDED = "excluded"
CONSISTENT = "consistent"
MISMATCHED = "mismatched"


@dataclass(frozen=True)
class Witness:
    """Proof that a sampled Frobenius class lies outside ``X(G)``.

    :param prime: first prime whose class point is missing from ``X(G)``; 0 for Haar data
    """

    prime: int
    generator: SPolynomial
    value: Fraction


@dataclass(frozen=True)
class CandidateVerdict:
    group: str
    status: str
    witness: Optional[Witness] = None
    linf: Optional[float] = None
    basis: Tuple[str, ...] = ()


@dataclass(frozen=True)
class IdentificationResult:
    """Ranked verdicts: consistent by ``linf``, then mismatched, then excluded."""

    polynomial: str
    sample_size: int
    verdicts: Tuple[CandidateVerdict, ...]
    indistinguishable: Tuple[Tuple[str, ...], ...] = ()

    @property
    def consistent(self) -> Tuple[str, ...]:
        return tuple(v.group for v in self.verdicts if v.status == CONSISTENT)

    @property
    def best(self) -> Optional[str]:
        names = self.consistent
        return names[0] if names else None

    @property
    def exit_code(self) -> int:
        n = len(self.consistent)
        if n == 1:
            return 0
        return 10 if n > 1 else 11


def exclude_by_kernel(
    sample: PrimeSample, G, degree_bound: Optional[int] = None, source: int = 0
) -> Optional[Witness]:
    """Witness excluding ``G``, or ``None`` when every sampled point lies in ``X(G)``."""
    allowed = {f.point for f in class_points(G)}
    seen = set()
    for e in sample.entries:
        point = e.points[source]
        if point in allowed or point in seen:
            continue
        seen.add(point)
        hit = kernel_ideal(G, degree_bound).first_nonvanishing(point)
        generator = hit[0] if hit is not None else separating_witness(G, point, degree_bound)
        value = generator.evaluate(point)
        logger.info("%s excluded at p=%d: %s = %s at %s", G.name, e.prime, generator, value, point)
        return Witness(e.prime, generator, value)
    return None


def _haar_image(G) -> Tuple[frozenset, Dict]:
    return frozenset(f.point for f in class_points(G)), aggregated_weights(G)


def _indistinguishable(groups: Sequence) -> Tuple[Tuple[str, ...], ...]:
    """Names of groups sharing class points and aggregated Haar weights."""
    buckets: List[Tuple[Tuple[frozenset, Dict], List[str]]] = []
    for G in groups:
        image = _haar_image(G)
        for key, names in buckets:
            if key == image:
                names.append(G.name)
                break
        else:
            buckets.append((image, [G.name]))
    return tuple(tuple(names) for _, names in buckets if len(names) > 1)


def identify_group(
    f: Optional[IntPolynomial],
    candidates: Sequence,
    count: int = DEFAULT_IDENTIFY_PRIMES,
    sample: Optional[PrimeSample] = None,
    degree_bound: Optional[int] = None,
    workers: Optional[int] = None,
) -> IdentificationResult:
    """Exclude, compare and rank ``candidates`` for the Galois group of ``f``.

    The comparison basis of ``G`` is its reduced character basis with members
    of degree above ``n(n-1)/2`` dropped. A candidate is consistent when the
    empirical Gram matrix is within 0.5 of ``M(G)`` in every entry.

    :param sample: use this sample instead of drawing ``count`` primes of ``f``
    :raises ValueError: for an empty candidate list or mismatched degrees
    """
    if not candidates:
        raise ValueError("empty candidate list")
    if sample is None:
        if f is None:
            raise ValueError("need a polynomial or a sample")
        sample = sample_primes(f, count, workers=workers)
    if not sample.entries:
        raise ValueError("empty sample")
    n = sample.degrees[0]
    wrong = [G.name for G in candidates if G.degree != n]
    if wrong:
        raise ValueError(f"candidates {wrong} do not have degree {n}")

    excluded: List[CandidateVerdict] = []
    compared: List[CandidateVerdict] = []
    for G in candidates:
        witness = exclude_by_kernel(sample, G, degree_bound)
        if witness is not None:
            excluded.append(CandidateVerdict(G.name, EXCLUDED, witness))
            continue
        basis = reduced_basis(G, max_degree=comb(n, 2), with_expressions=False)
        report = gram_report(sample, basis, G)
        linf = report.norms[-1].linf
        status = CONSISTENT if linf < STABLE_THRESHOLD else MISMATCHED
        logger.info("%s: %s, linf %.6f on %d functions", G.name, status, linf, basis.r)
        compared.append(CandidateVerdict(G.name, status, linf=linf, basis=basis.labels))

    compared.sort(key=lambda v: (v.status != CONSISTENT, v.linf))
    consistent_names = {v.group for v in compared if v.status == CONSISTENT}
    notes = _indistinguishable([G for G in candidates if G.name in consistent_names])
    label = str(f) if f is not None else sample.label
    return IdentificationResult(label, sample.total_weight, tuple(compared + excluded), notes)
