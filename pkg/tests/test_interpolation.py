# tests/test_interpolation.py
from fractions import Fraction

import pytest

from charparam import (
    DegreeBoundTooSmallError,
    NotInRestrictionImageError,
    SPolynomial,
    class_points,
    fiber_values,
    interpolate_character,
    parse_spolynomial,
    scaled_idempotents,
    spolynomial_values,
)
from chartab import CyclotomicNumber


def test_d4x8_idempotents(d4x8):
    e1, e2, e3 = scaled_idempotents(d4x8)
    assert e1 == parse_spolynomial("s1 + 1", 7)
    assert e2 == parse_spolynomial("5*s1 - 2*s2 + 7", 7)
    assert e3 == parse_spolynomial("-6*s1 + 2*s2", 7)
    assert e1 + e2 + e3 == SPolynomial.constant(7, 8)


def test_idempotents_take_order_on_their_own_point(d4):
    for i, (e, fiber) in enumerate(zip(scaled_idempotents(d4), class_points(d4))):
        for j, other in enumerate(class_points(d4)):
            assert e.evaluate(other.point) == (d4.order if i == j else 0)


def test_sym4_degree_two_character(sym4, sym4_table):
    values = sym4_table.characters[2]
    chi = interpolate_character(values, sym4)
    assert chi == parse_spolynomial("s1^2 - s1 - s2 - 1", 3)
    assert spolynomial_values(chi, sym4) == (2, 0, -1, 2, 0)


def test_fiber_values_need_agreement_on_fused_classes(d4):
    assert fiber_values([1, 1, 1, 1, 1], d4) == [1, 1, 1, 1]
    with pytest.raises(NotInRestrictionImageError):
        # center and the other double transpositions disagree
        fiber_values([2, 0, -2, 0, 0], d4)
    with pytest.raises(ValueError):
        fiber_values([1, 1], d4)


def test_irrational_values_are_rejected(d4):
    i = CyclotomicNumber.zeta(4)
    with pytest.raises(NotInRestrictionImageError):
        fiber_values([i, i, i, i, i], d4)


def test_explicit_degree_bound(sym4, sym4_table):
    values = sym4_table.characters[2]
    with pytest.raises(DegreeBoundTooSmallError) as excinfo:
        interpolate_character(values, sym4, degree_bound=1)
    assert excinfo.value.degree_bound == 1
    with pytest.raises(ValueError):
        interpolate_character(values, sym4, degree_bound=0)


def test_configured_bound_is_raised_when_needed(sym4, sym4_table, monkeypatch):
    monkeypatch.setenv("FROBCHAR_DEGREE_BOUND", "1")
    chi = interpolate_character(sym4_table.characters[2], sym4)
    assert chi.total_degree == 2
    assert chi.evaluate(class_points(sym4)[0].point) == Fraction(2)


@pytest.mark.parametrize("name", ["Sym4", "A4", "D4", "C4", "V4", "Sym5", "A5x5", "A5x6", "D4x8", "Q8", "PSL2_7"])
def test_interpolation_recovers_evaluated_values(name):
    from catalog import get_group

    G = get_group(name)
    n = G.degree - 1
    for text in ("1", "s1", f"s1^2 - 2*s{n}", "s1*s2 + 3"):
        values = spolynomial_values(parse_spolynomial(text, n), G)
        chi = interpolate_character(values, G, degree_bound=2)
        assert spolynomial_values(chi, G) == values
