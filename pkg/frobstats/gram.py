# frobstats/gram.py
"""Empirical and Haar Gram matrices of test systems, error norms and convergence.

Sums are exact: the value vectors of a sample are tallied in a
:class:`collections.Counter` and the averages are formed once, as fractions,
at the end. Floats appear only in :func:`error_norms`.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from polyarith import IntPolynomial

from .basis import BasisError, TestBasis, joint_basis, kronecker_function
from .sampling import PrimeSample, sample_joint, sample_primes

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[Fraction, ...], ...]

STABLE_THRESHOLD = 0.5
HALF_TOLERANCE = 1e-9


@dataclass(frozen=True)
class BatchNorms:
    """Error norms of one prefix of the sample."""

    batch: int
    size: int
    l2: float
    l8: float
    linf: float


@dataclass(frozen=True)
class GramReport:
    """Outcome of comparing a test system's empirical Gram matrix with a group.

    :param cross_block: the ``B_f`` by ``B_g`` block of a joint run
    :param stable_at: least batch after which every computed ``linf`` stays
        below 0.5, ``None`` when the last batch fails
    :param horizon: number of batches computed; stability is only known up to it
    """

    labels: Tuple[str, ...]
    sample_size: int
    empirical: Matrix
    theoretical: Optional[Matrix] = None
    group: Optional[str] = None
    norms: Tuple[BatchNorms, ...] = ()
    rounded: Tuple[Tuple[int, ...], ...] = ()
    ambiguous: Tuple[Tuple[int, int], ...] = ()
    stable_at: Optional[int] = None
    horizon: int = 0
    cross_block: Optional[Matrix] = None
    polynomials: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> Optional[str]:
        """``"consistent"`` when the last ``linf`` is below 0.5, ``"mismatched"`` otherwise."""
        if self.theoretical is None or not self.norms:
            return None
        return "consistent" if self.norms[-1].linf < STABLE_THRESHOLD else "mismatched"


def _tally(sample: PrimeSample, basis: TestBasis, entries=None) -> Counter:
    tally: Counter = Counter()
    for e in sample.entries if entries is None else entries:
        tally[basis.evaluate(e)] += e.weight
    return tally


def _gram_from_tally(tally: Counter, r: int, total: int) -> Matrix:
    if total <= 0:
        raise ValueError("empty sample")
    sums = [[Fraction(0)] * r for _ in range(r)]
    for values, weight in tally.items():
        for i in range(r):
            vi = values[i] * weight
            if not vi:
                continue
            row = sums[i]
            for j in range(i, r):
                row[j] += vi * values[j]
    out = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            out[i][j] = out[j][i] = sums[i][j] / total
    return tuple(tuple(row) for row in out)


def empirical_gram(sample: PrimeSample, basis: TestBasis) -> Matrix:
    """``E_S(chi_i chi_j)`` over the sample, exactly.

    :raises ValueError: for an empty sample
    :raises BasisError: when a function does not fit the sample's degree
    """
    if not sample.entries:
        raise ValueError("empty sample")
    return _gram_from_tally(_tally(sample, basis), basis.r, sample.total_weight)


def theoretical_gram(G, basis: TestBasis) -> Matrix:
    """Haar-weighted Gram matrix ``M(G)`` of the system, exactly."""
    values = basis.class_matrix(G)
    weights = [Fraction(s, G.order) for s in G.class_sizes]
    r = basis.r
    out = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        for j in range(i, r):
            out[i][j] = out[j][i] = sum(
                (w * a * b for w, a, b in zip(weights, values[i], values[j])), Fraction(0)
            )
    return tuple(tuple(row) for row in out)


def cross_gram(G_claimed, basis: TestBasis, sample: PrimeSample) -> Matrix:
    """Empirical Gram of a group's test system read on another polynomial's sample."""
    if sample.entries and G_claimed.degree != sample.degrees[0]:
        raise BasisError(f"{G_claimed.name} has degree {G_claimed.degree}, the sample degree {sample.degrees[0]}")
    return empirical_gram(sample, basis)


def error_matrix(E: Matrix, M: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(re, rm)) for re, rm in zip(E, M))


def error_norms(Z: Sequence[Sequence]) -> Tuple[float, float, float]:
    """Normalized ``l2``, ``l8`` and max norms ``((1/r^2) sum |z|^p)^(1/p)``."""
    arr = np.abs(np.array([[float(v) for v in row] for row in Z], dtype=float))
    if arr.size == 0:
        raise ValueError("error norms of an empty matrix")
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"error matrix must be square, got shape {arr.shape}")
    linf = float(arr.max())
    if linf == 0.0:
        return 0.0, 0.0, 0.0
    # scale by the max so the 8th powers cannot overflow
    scaled = arr / linf
    l2 = linf * float(np.sqrt(np.mean(scaled**2)))
    l8 = linf * float(np.mean(scaled**8) ** 0.125)
    return l2, l8, linf


def round_matrix(M: Matrix) -> Tuple[Tuple[Tuple[int, ...], ...], Tuple[Tuple[int, int], ...]]:
    """Nearest integers, with the positions of entries within ``1e-9`` of a half integer.

    Half integers round away from zero; they are reported, not trusted.
    """
    rounded = []
    ambiguous = []
    for i, row in enumerate(M):
        out = []
        for j, v in enumerate(row):
            v = Fraction(v)
            frac = abs(v - math.floor(v))
            if abs(float(frac) - 0.5) < HALF_TOLERANCE:
                ambiguous.append((i, j))
            n = math.floor(abs(v) + Fraction(1, 2))
            out.append(int(n if v >= 0 else -n))
        rounded.append(tuple(out))
    return tuple(rounded), tuple(ambiguous)


def stable_point(linf: Sequence[float], threshold: float = STABLE_THRESHOLD) -> Tuple[Optional[int], int]:
    """Least 1-based batch ``k`` with every batch from ``k`` on below ``threshold``.

    :returns: ``(k or None, horizon)``; ``None`` when the last batch fails
    """
    horizon = len(linf)
    k = horizon
    while k > 0 and linf[k - 1] < threshold:
        k -= 1
    return (k + 1 if k < horizon else None), horizon


def _report(
    sample: PrimeSample,
    basis: TestBasis,
    G=None,
    increment: Optional[int] = None,
    max_batches: Optional[int] = None,
) -> GramReport:
    if not sample.entries:
        raise ValueError("empty sample")
    M = theoretical_gram(G, basis) if G is not None else None
    total_entries = len(sample.entries)
    if increment is None:
        increment = total_entries
    if increment < 1:
        raise ValueError("increment must be at least 1")
    batches = max_batches or max(1, math.ceil(total_entries / increment))

    tally: Counter = Counter()
    weight = 0
    norms: List[BatchNorms] = []
    E: Matrix = ()
    for k in range(1, batches + 1):
        chunk = sample.entries[(k - 1) * increment : k * increment]
        if not chunk:
            logger.warning("sample exhausted after %d of %d batches", k - 1, batches)
            break
        tally.update(_tally(sample, basis, chunk))
        weight += sum(e.weight for e in chunk)
        E = _gram_from_tally(tally, basis.r, weight)
        if M is not None:
            l2, l8, linf = error_norms(error_matrix(E, M))
            norms.append(BatchNorms(k, min(k * increment, total_entries), l2, l8, linf))
            logger.debug("batch %d (%d entries): %.6f < %.6f < %.6f", k, norms[-1].size, l2, l8, linf)
    if not E:
        raise ValueError("empty sample")
    rounded, ambiguous = round_matrix(E)
    stable_at, horizon = stable_point([n.linf for n in norms]) if norms else (None, 0)
    return GramReport(
        labels=basis.labels,
        sample_size=weight,
        empirical=E,
        theoretical=M,
        group=getattr(G, "name", None),
        norms=tuple(norms),
        rounded=rounded,
        ambiguous=ambiguous,
        stable_at=stable_at,
        horizon=horizon,
        polynomials=tuple(str(f) for f in sample.polynomials),
    )


def gram_report(sample: PrimeSample, basis: TestBasis, G=None) -> GramReport:
    """One-batch report over the whole sample, compared with ``G`` when given."""
    return _report(sample, basis, G)


def convergence_run(
    f: Optional[IntPolynomial],
    G,
    basis: TestBasis,
    increment: int,
    max_batches: int,
    sample: Optional[PrimeSample] = None,
    workers: Optional[int] = None,
) -> GramReport:
    """Norms of ``E_S - M(G)`` for ``|S| = increment * k``, ``k = 1..max_batches``.

    Batches are cumulative; each adds ``increment`` primes to the running tally.
    """
    if increment < 1 or max_batches < 1:
        raise ValueError("increment and batch count must be at least 1")
    if sample is None:
        if f is None:
            raise ValueError("need a polynomial or a sample")
        sample = sample_primes(f, increment * max_batches, workers=workers)
    logger.info("convergence of %s against %s: %d x %d", basis.name, getattr(G, "name", "?"), max_batches, increment)
    return _report(sample, basis, G, increment, max_batches)


def joint_gram(
    f: IntPolynomial,
    g: IntPolynomial,
    basis_f: TestBasis,
    basis_g: TestBasis,
    count: int,
    start: int = 2,
    workers: Optional[int] = None,
) -> GramReport:
    """Gram matrix of ``basis_f`` on ``f`` together with ``basis_g`` on ``g`` at the same primes.

    Primes bad for either polynomial are skipped. ``cross_block`` holds the
    inner products between the two systems.
    """
    sample = sample_joint([f, g], count, start, workers)
    combined = joint_basis(basis_f, basis_g)
    report = _report(sample, combined)
    rf = basis_f.r
    return replace(report, cross_block=tuple(row[rf:] for row in report.empirical[:rf]))


def is_symmetric(M: Iterable[Sequence[Fraction]]) -> bool:
    rows = [tuple(r) for r in M]
    return all(rows[i][j] == rows[j][i] for i in range(len(rows)) for j in range(i))


def bordered_gram(
    f: IntPolynomial,
    basis: TestBasis,
    discriminant: int,
    count: int,
    companion: Optional[IntPolynomial] = None,
    start: int = 2,
    workers: Optional[int] = None,
) -> GramReport:
    """Gram matrix of ``basis`` on ``f`` bordered by the Kronecker character of ``discriminant``.

    The character is read at the prime, so ``companion`` (the polynomial
    cutting out the quadratic field) only takes part in skipping bad primes.
    Primes dividing ``discriminant`` are skipped, where the symbol would be 0.
    ``cross_block`` is the last column without its final entry.
    """
    polys = [f] if companion is None else [f, companion]
    sample = sample_joint(polys, count, start, workers, also_skip=discriminant)
    extended = basis.extended([kronecker_function(discriminant)])
    report = _report(sample, extended)
    return replace(report, cross_block=tuple((row[-1],) for row in report.empirical[:-1]))
