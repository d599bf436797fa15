# polyarith/factorization.py
"""Factorization types of integer polynomials modulo primes.

Only the degrees of the irreducible factors are extracted, via the
distinct-degree stage of Cantor-Zassenhaus; the equal-degree split is
never needed because each distinct-degree block ``h`` of degree ``k·i``
holds exactly ``k`` irreducible factors of degree ``i``.
"""

from __future__ import annotations

import logging
from typing import Iterable, Tuple

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_ddf_zassenhaus,
    gf_degree,
    gf_from_int_poly,
    gf_monic,
    gf_sqf_p,
)

from .cycletype import CycleType
from .intpoly import IntPolynomial, PolynomialError, RamifiedPrimeError, bad_prime_modulus

logger = logging.getLogger(__name__)


def _reduce(f: IntPolynomial, p: int) -> list:
    if not sympy.isprime(p):
        raise ValueError(f"reduction modulus {p} is not a prime")
    if f.leading_coefficient % p == 0:
        raise RamifiedPrimeError(p, "a divisor of the leading coefficient")
    return gf_from_int_poly(f.descending(), p)


def is_squarefree_mod(f: IntPolynomial, p: int) -> bool:
    """True iff ``gcd(f, f')`` is constant over ``F_p``.

    :raises RamifiedPrimeError: when ``p`` divides the leading coefficient
    """
    return bool(gf_sqf_p(_reduce(f, p), p, ZZ))


def factorization_type(f: IntPolynomial, p: int) -> CycleType:
    """Degrees of the irreducible factors of ``f mod p``.

    :raises ValueError: if ``p`` is not prime
    :raises RamifiedPrimeError: if ``p | lc(f)`` or ``f mod p`` has a repeated factor
    """
    g = _reduce(f, p)
    if not gf_sqf_p(g, p, ZZ):
        raise RamifiedPrimeError(p)
    _, monic = gf_monic(g, p, ZZ)
    parts: list[int] = []
    for block, i in gf_ddf_zassenhaus(monic, p, ZZ):
        parts.extend([i] * (gf_degree(block) // i))
    return CycleType.of(parts)


def factorization_types(f: IntPolynomial, primes: Iterable[int]) -> list[Tuple[int, CycleType]]:
    """Batch helper used by sampling workers; primes must already be unramified."""
    return [(p, factorization_type(f, p)) for p in primes]


def irreducibility_hint(f: IntPolynomial, primes: int = 20) -> Tuple[bool, str]:
    """Cheap evidence about irreducibility over Q.

    Returns ``(True, reason)`` when ``f`` is irreducible modulo some unramified
    prime among the first ``primes`` unramified ones. A Frobenius of a
    transitive group has a fixed point with probability below one, so a sample
    where every type contains a linear factor is reported as likely reducible.
    Otherwise the result is ``(True, "no contradiction ...")``.
    """
    if primes < 1:
        raise PolynomialError("need at least one prime for the irreducibility hint")
    modulus = bad_prime_modulus(f)
    seen = 0
    all_have_root = True
    p = 1
    while seen < primes:
        p = sympy.nextprime(p)
        if modulus % p == 0:
            continue
        ct = factorization_type(f, p)
        seen += 1
        if ct.parts == (f.degree,):
            return True, f"irreducible modulo {p}"
        if 1 not in ct.parts:
            all_have_root = False
    if all_have_root and f.degree > 1:
        logger.info("every sampled factorization type has a linear factor")
        return False, f"a linear factor modulo each of the first {primes} unramified primes"
    return True, f"no degree-pattern contradiction over {primes} primes"
