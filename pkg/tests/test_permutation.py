# tests/test_permutation.py
import pytest

from permcore import (
    PermutationError,
    compose,
    conjugate,
    cycle_type,
    format_permutation,
    from_images,
    identity,
    inverse,
    order,
    parse_permutation,
    power,
)
from polyarith import CycleType


def test_parse_and_format():
    g = parse_permutation("(1,2,3)(4,5)", 5)
    assert g == (1, 2, 0, 4, 3)
    assert format_permutation(g) == "(1,2,3)(4,5)"
    assert parse_permutation("(1 2 3)(4 5)", 5) == g
    assert format_permutation(identity(4)) == "()"
    assert parse_permutation("()", 3) == identity(3)


@pytest.mark.parametrize("text", ["(1,2,6)", "(1,2)(2,3)", "(1,2)x", "(0,1)"])
def test_parse_rejects(text):
    with pytest.raises(PermutationError):
        parse_permutation(text, 5)


def test_compose_applies_right_factor_first():
    a = parse_permutation("(1,2)", 3)
    b = parse_permutation("(2,3)", 3)
    # b first: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
    assert compose(a, b) == parse_permutation("(1,2,3)", 3)


def test_inverse_power_order_conjugate():
    g = parse_permutation("(1,2,3,4)(5,6)", 6)
    assert compose(g, inverse(g)) == identity(6)
    assert power(g, 4) == identity(6)
    assert power(g, -1) == inverse(g)
    assert order(g) == 4
    assert cycle_type(g) == CycleType((2, 4))
    x = parse_permutation("(1,5)", 6)
    assert cycle_type(conjugate(g, x)) == cycle_type(g)


def test_from_images():
    assert from_images([2, 3, 1]) == parse_permutation("(1,2,3)", 3)
    with pytest.raises(PermutationError):
        from_images([1, 1, 2])
