# tests/test_primes.py
import itertools

import pytest
import sympy

from frobstats import iter_primes, primes_between, unramified_primes


def test_primes_between_small_windows():
    assert primes_between(0, 30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_between(2, 3) == [2]
    assert primes_between(3, 3) == []
    assert primes_between(14, 17) == []
    assert primes_between(90, 110) == [97, 101, 103, 107, 109]


def test_primes_between_agrees_with_sympy():
    low, high = 65_000, 132_000
    assert primes_between(low, high) == list(sympy.primerange(low, high))


def test_iter_primes_crosses_segments():
    stream = list(itertools.islice(iter_primes(65_500), 20))
    assert stream == list(itertools.islice(sympy.primerange(65_500, 70_000), 20))
    assert next(iter_primes(0)) == 2


def test_unramified_primes_skips_divisors():
    primes, skipped = unramified_primes(229, 16)
    assert len(primes) == 16
    assert 229 not in primes
    assert skipped == []
    primes, skipped = unramified_primes(2 * 3 * 7, 4)
    assert primes == [5, 11, 13, 17]
    assert skipped == [2, 3, 7]


def test_unramified_primes_start():
    primes, skipped = unramified_primes(15, 3, start=4)
    assert primes == [7, 11, 13]
    assert skipped == [5]


def test_unramified_primes_rejects_bad_input():
    with pytest.raises(ValueError):
        unramified_primes(1, 0)
    with pytest.raises(ValueError):
        unramified_primes(0, 3)
