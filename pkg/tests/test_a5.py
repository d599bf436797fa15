# tests/test_a5.py
import io
import json

import pytest

from catalog import corpus_polynomial, get_group
from charparam import interpolate_character, parse_spolynomial, restriction_matrix, spolynomial_values
from chartab import character_table, galois_orbits, rational_character_table
from cli.commands import run
from frobstats import joint_gram, resolve_basis

D = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 2))


@pytest.fixture(scope="module")
def a5():
    return get_group("A5x5")


@pytest.fixture(scope="module")
def a5_table(a5):
    return character_table(a5)


def test_irreducible_degrees(a5_table):
    assert a5_table.degrees == (1, 3, 3, 4, 5)


def test_the_two_degree_three_characters_are_galois_conjugate(a5_table):
    assert galois_orbits(a5_table) == ((0,), (1, 2), (3,), (4,))


def test_rational_table_is_ordered_by_degree(a5_table):
    rational = rational_character_table(a5_table)
    assert rational.degrees == (1, 4, 5, 6)
    assert rational.r == 4
    assert rational.gram() == D


def test_degree_five_character_interpolates(a5, a5_table):
    chi = a5_table.characters[a5_table.degrees.index(5)]
    p = interpolate_character(chi, a5)
    assert p == parse_spolynomial("s1^2 - s1 - s2 - 1", 4)
    assert spolynomial_values(p, a5) == tuple(v.to_fraction() for v in chi)


def test_sym5_restricts_to_a5(a5_table):
    sym5_table = character_table(get_group("Sym5"))
    R = restriction_matrix(sym5_table, a5_table)
    for row, chi in zip(R, sym5_table.characters):
        assert sum(m * d for m, d in zip(row, a5_table.degrees)) == chi[0].to_fraction()
    # the degree-6 character splits into the conjugate pair of degree 3
    assert R[sym5_table.degrees.index(6)] == (0, 1, 1, 0, 0)


def test_joint_gram_of_the_two_a5_fields():
    report = joint_gram(
        corpus_polynomial("a5x5"),
        corpus_polynomial("a5x6"),
        resolve_basis("a5-rational", 5),
        resolve_basis("a5-rational", 6),
        1000,
    )
    assert report.sample_size == 1000
    assert report.ambiguous == ()
    expected = tuple(row + row for row in D) * 2
    assert report.rounded == expected
    assert tuple(tuple(round(v) for v in row) for row in report.cross_block) == D


def test_compare_command_with_the_a5_basis():
    out = io.StringIO()
    code = run(
        [
            "compare",
            str(corpus_polynomial("a5x5")),
            str(corpus_polynomial("a5x6")),
            "--basis",
            "a5-rational",
            "--count",
            "1000",
        ],
        out=out,
    )
    data = json.loads(out.getvalue())
    assert code == 0
    assert len(data["labels"]) == 8
    assert [row[4:] for row in data["rounded"][:4]] == [list(r) for r in D]
