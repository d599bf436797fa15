# tests/test_intpoly.py
import pytest

from polyarith import (
    IntPolynomial,
    PolynomialError,
    bad_prime_modulus,
    bad_primes,
    discriminant,
    format_polynomial,
    is_ramified,
    parse_polynomial,
    polynomial_from_coefficients,
)


def test_parse_text_forms():
    f = parse_polynomial("x^4 + x + 1")
    assert f.coefficients == (1, 1, 0, 0, 1)
    assert parse_polynomial("x**4 - 2x^2 + 2").coefficients == (2, 0, -2, 0, 1)
    assert parse_polynomial("[1, 0, 1]") == IntPolynomial((1, 0, 1))


@pytest.mark.parametrize("text", ["", "x^2 + y", "x/2 + 1", "7", "[1, 0.5]", "x^^2"])
def test_parse_rejects_bad_input(text):
    with pytest.raises(PolynomialError):
        parse_polynomial(text)


def test_format_is_canonical():
    assert format_polynomial(parse_polynomial("1 + x + x^4")) == "x^4 + x + 1"
    assert str(parse_polynomial("x^4-2*x^2+2")) == "x^4 - 2x^2 + 2"
    assert str(IntPolynomial((-1, 0, -3))) == "-3x^2 - 1"


def test_discriminant_and_bad_primes():
    f = parse_polynomial("x^4 + x + 1")
    assert discriminant(f) == 229
    assert bad_primes(f) == [229]
    assert is_ramified(f, 229)
    assert not is_ramified(f, 2)
    g = parse_polynomial("3x^2 + 1")
    # disc = -12, leading coefficient 3
    assert bad_prime_modulus(g) == 36
    assert bad_primes(g) == [2, 3]


def test_zero_discriminant_gives_zero_modulus():
    assert bad_prime_modulus(parse_polynomial("(x - 1)^2 * (x + 1)")) == 0


def test_coefficient_arrays_drop_trailing_zeros():
    assert polynomial_from_coefficients([1, 0, 1, 0]) == IntPolynomial((1, 0, 1))
    assert parse_polynomial("[1, 0, 1, 0]").degree == 2
    with pytest.raises(PolynomialError):
        parse_polynomial("[5, 0]")
