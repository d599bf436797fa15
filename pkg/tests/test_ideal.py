# tests/test_ideal.py
import pytest

from charparam import (
    ClassPoint,
    SPolynomial,
    all_class_points,
    generic_relations,
    kernel_ideal,
    parse_spolynomial,
    separating_witness,
)

D4_RELATION = "s1^2 - s1 - s2 - s3 - 2"


def test_d4_kernel_contains_the_character_relation(d4):
    ideal = kernel_ideal(d4, 2)
    p = parse_spolynomial(D4_RELATION, 3)
    assert ideal.contains(p)
    assert ideal.in_span(p)
    assert ideal.generators
    assert all(ideal.contains(g) for g in ideal.generators)
    # (0,0,1) is the 3-cycle point, missing from D4
    assert p.evaluate(ClassPoint((0, 0, 1))) == -3
    assert ideal.first_nonvanishing(ClassPoint((0, 0, 1))) is not None
    assert ideal.first_nonvanishing(ClassPoint((3, 3, 1))) is None


def test_generator_is_reported_up_to_scaling(d4):
    ideal = kernel_ideal(d4, 2)
    g = ideal.generators[0]
    assert ideal.has_generator(g * 3)
    assert not ideal.has_generator(SPolynomial.constant(3, 0))


def test_contains_respects_degree_bound(d4):
    p = parse_spolynomial(D4_RELATION, 3)
    assert not kernel_ideal(d4, 1).contains(p)
    assert not kernel_ideal(d4, 2).contains(parse_spolynomial(D4_RELATION, 4))


def test_sym4_kernel_does_not_hold_the_d4_relation(sym4):
    ideal = kernel_ideal(sym4, 2)
    assert all(ideal.contains(r) for r in ideal.relations + ideal.generators)
    assert not ideal.contains(parse_spolynomial(D4_RELATION, 3))


def test_generic_relations_vanish_on_every_point():
    for n in (4, 5, 6):
        points = all_class_points(n)
        for rel in generic_relations(n, 2):
            assert all(rel.evaluate(pt) == 0 for pt in points)
    # s1*s3 - s2, s2*s3 - s1, s3^2 - 1
    assert len(generic_relations(4, 2)) == 3


def test_alternating_relations_vanish_on_even_points():
    n = 5
    even = [pt for pt in all_class_points(n) if pt[n - 1] == 1]
    for rel in generic_relations(n, 2, alternating=True):
        assert all(rel.evaluate(pt) == 0 for pt in even)


def test_separating_witness(d4, sym4):
    outside = ClassPoint((0, 0, 1))
    w = separating_witness(d4, outside, 2)
    assert w is not None
    assert w.evaluate(outside) != 0
    assert all(w.evaluate(pt) == 0 for pt in kernel_ideal(d4, 2).points)
    assert separating_witness(d4, ClassPoint((3, 3, 1)), 2) is None


def test_separating_witness_falls_back_to_linear_products(d4):
    outside = ClassPoint((0, 0, 1))
    w = separating_witness(d4, outside, 1)
    assert w.evaluate(outside) != 0
    assert all(w.evaluate(pt) == 0 for pt in kernel_ideal(d4, 1).points)


def test_bad_bound():
    from catalog import get_group

    with pytest.raises(ValueError):
        kernel_ideal(get_group("D4"), 0)


@pytest.mark.parametrize(
    "big, small",
    [
        ("Sym4", "D4"),
        ("Sym4", "A4"),
        ("D4", "C4"),
        ("D4", "V4"),
        ("A4", "V4"),
        ("Sym5", "A5x5"),
        ("PGL2_7", "PSL2_7"),
    ],
)
def test_smaller_group_has_the_larger_kernel(big, small):
    from catalog import get_group
    from permcore import is_subgroup

    G, H = get_group(big), get_group(small)
    assert is_subgroup(H, G)
    I_G, I_H = kernel_ideal(G, 2), kernel_ideal(H, 2)
    assert set(I_H.points) <= set(I_G.points)
    for g in I_G.generators:
        assert I_H.contains(g)
        assert I_H.in_span(g)
