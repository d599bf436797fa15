# tests/test_gram.py
from fractions import Fraction

import pytest

from catalog import corpus_polynomial, get_group
from charparam import kernel_ideal
from frobstats import (
    bordered_gram,
    convergence_run,
    cross_gram,
    cycle_type_frequencies,
    empirical_gram,
    error_matrix,
    error_norms,
    gram_report,
    haar_sample,
    is_symmetric,
    joint_gram,
    kronecker_function,
    parse_basis,
    resolve_basis,
    round_matrix,
    sample_primes,
    stable_point,
    theoretical_gram,
)
from permcore import aggregated_weights
from polyarith import parse_polynomial

M_D4X8 = ((1, 0, 0), (0, 2, 1), (0, 1, 3))
M_Q8 = ((1, 0, 0), (0, 1, 0), (0, 0, 3))
# sigma functions on Q8 and tau functions on D4x8
CROSS_SIGMA_ON_Q8 = ((1, 1, -1), (1, 2, 0), (-1, 0, 5))
CROSS_TAU_ON_D4X8 = ((1, -1, 2), (-1, 3, -3), (2, -3, 7))
M_D4_DEGREE4 = (
    (1, 0, 0, 0, 1),
    (0, 2, 1, 0, 0),
    (0, 1, 2, 0, 0),
    (0, 0, 0, 1, 1),
    (1, 0, 0, 1, 2),
)
M_D4_BORDERED = (
    (1, 0, 0, 0, 0),
    (0, 2, 1, 0, 1),
    (0, 1, 2, 0, 0),
    (0, 0, 0, 1, 0),
    (0, 1, 0, 0, 1),
)
IDENTITY5 = tuple(tuple(int(i == j) for j in range(5)) for i in range(5))


def _linf(E, M):
    return error_norms(error_matrix(E, M))[2]


@pytest.fixture(scope="module")
def sigma():
    return resolve_basis("d4x8-reduced", 8)


@pytest.fixture(scope="module")
def tau():
    return resolve_basis("q8-reduced", 8)


@pytest.fixture(scope="module")
def sym4_irreducible():
    return resolve_basis("sym4-irreducible", 4)


def test_degree8_theoretical_matrices(d4x8, q8, sigma, tau):
    assert theoretical_gram(d4x8, sigma) == M_D4X8
    assert theoretical_gram(q8, tau) == M_Q8
    assert theoretical_gram(q8, sigma) == CROSS_SIGMA_ON_Q8
    assert theoretical_gram(d4x8, tau) == CROSS_TAU_ON_D4X8


def test_degree4_theoretical_matrices(sym4, d4, sym4_irreducible):
    assert theoretical_gram(sym4, sym4_irreducible) == IDENTITY5
    assert theoretical_gram(d4, sym4_irreducible) == M_D4_DEGREE4


def test_bordered_theoretical_matrix(d4):
    basis = resolve_basis("symmetric", 4).extended([kronecker_function(-4, (1, 1, 1, -1, -1))])
    assert theoretical_gram(d4, basis) == M_D4_BORDERED


def test_psl2_7_symmetric_functions(psl2_7):
    basis = parse_basis("1, s1, s2, s3", 8)
    assert theoretical_gram(psl2_7, basis) == ((1, 0, 0, 1), (0, 1, 1, 2), (0, 1, 4, 3), (1, 2, 3, 10))


def test_psl2_7_rational_irreducibles(psl2_7):
    M = theoretical_gram(psl2_7, resolve_basis("h1-irreducible", 8))
    assert M == tuple(tuple(Fraction(d if i == j else 0) for j in range(5)) for i, d in enumerate((1, 2, 1, 1, 1)))


@pytest.mark.parametrize(
    "group, spec",
    [
        ("D4", "sym4-irreducible"),
        ("Sym4", "symmetric"),
        ("Q8", "d4x8-reduced"),
        ("PSL2_7", "h1-irreducible"),
        ("T8_10", "alternating"),
    ],
)
def test_haar_sample_reproduces_theoretical_gram(group, spec):
    G = get_group(group)
    basis = resolve_basis(spec, G.degree)
    assert empirical_gram(haar_sample(G), basis) == theoretical_gram(G, basis)


def test_first_sixteen_primes_of_the_d4_polynomial():
    sample = sample_primes(parse_polynomial("x^4 - 2x^2 + 2"), 16)
    report = gram_report(sample, resolve_basis("symmetric", 4))
    assert report.sample_size == 16
    assert report.empirical[1][1] == Fraction(3, 2)
    assert report.rounded[1][1] == 2
    assert (1, 1) in report.ambiguous
    assert report.theoretical is None
    assert report.verdict is None


def test_degree4_empirical_separation(sym4, d4, sym4_irreducible):
    sym4_sample = sample_primes(corpus_polynomial("sym4"), 1024)
    d4_sample = sample_primes(corpus_polynomial("d4"), 1024)
    assert gram_report(sym4_sample, sym4_irreducible, sym4).verdict == "consistent"
    assert gram_report(d4_sample, sym4_irreducible, d4).verdict == "consistent"
    assert gram_report(d4_sample, sym4_irreducible, d4).rounded == M_D4_DEGREE4
    assert gram_report(d4_sample, sym4_irreducible, sym4).verdict == "mismatched"


def test_degree8_eighty_primes(d4x8, q8, sigma, tau):
    d4x8_sample = sample_primes(corpus_polynomial("d4x8"), 80)
    q8_sample = sample_primes(corpus_polynomial("q8"), 80)
    assert _linf(empirical_gram(d4x8_sample, sigma), M_D4X8) < 0.5
    assert _linf(empirical_gram(q8_sample, tau), M_Q8) < 0.5
    assert _linf(cross_gram(q8, tau, d4x8_sample), CROSS_TAU_ON_D4X8) < 0.5
    assert _linf(cross_gram(d4x8, sigma, q8_sample), CROSS_SIGMA_ON_Q8) < 0.5
    # the wrong group is visibly off
    assert _linf(cross_gram(q8, tau, d4x8_sample), M_Q8) > 0.5


def test_cross_gram_checks_degree(d4, sigma):
    sample = sample_primes(corpus_polynomial("d4x8"), 8)
    with pytest.raises(ValueError):
        cross_gram(d4, sigma, sample)


def test_bordered_gram_on_the_d4_polynomial(d4):
    basis = resolve_basis("symmetric", 4)
    report = bordered_gram(corpus_polynomial("d4"), basis, -4, 1024, companion=parse_polynomial("x^2 + 1"))
    assert report.labels[-1] == "kron(-4)"
    assert report.sample_size == 1024
    assert report.cross_block == tuple((row[-1],) for row in report.empirical[:-1])
    assert _linf(report.empirical, M_D4_BORDERED) < 0.5


def test_sym8_norms_on_first_batch():
    sample = sample_primes(corpus_polynomial("sym8"), 128)
    basis = resolve_basis("symmetric", 8)
    identity = tuple(tuple(int(i == j) for j in range(8)) for i in range(8))
    l2, l8, linf = error_norms(error_matrix(empirical_gram(sample, basis), identity))
    assert l2 == pytest.approx(0.104870, abs=0.05)
    assert l8 == pytest.approx(0.184799, abs=0.05)
    assert linf == pytest.approx(0.257812, abs=0.05)


def test_error_norms():
    l2, l8, linf = error_norms([[3, 0], [0, 4]])
    assert l2 == pytest.approx(2.5)
    assert linf == 4
    assert l2 < l8 < linf
    assert error_norms([[0, 0], [0, 0]]) == (0.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        error_norms([])
    with pytest.raises(ValueError):
        error_norms([[1, 2]])


def test_round_matrix_reports_half_integers():
    rounded, ambiguous = round_matrix(((Fraction(5, 2), Fraction(7, 3)), (Fraction(-5, 2), Fraction(-1, 3))))
    assert rounded == ((3, 2), (-3, 0))
    assert ambiguous == ((0, 0), (1, 0))


@pytest.mark.parametrize(
    "linf, expected",
    [
        ([0.6, 0.4, 0.3], (2, 3)),
        ([0.4], (1, 1)),
        ([0.6], (None, 1)),
        ([0.4, 0.6], (None, 2)),
        ([0.4, 0.6, 0.2, 0.1], (3, 4)),
        ([], (None, 0)),
    ],
)
def test_stable_point(linf, expected):
    assert stable_point(linf) == expected


def test_convergence_run_batches(d4, sym4_irreducible):
    sample = sample_primes(corpus_polynomial("d4"), 256)
    report = convergence_run(None, d4, sym4_irreducible, 64, 4, sample=sample)
    assert [n.size for n in report.norms] == [64, 128, 192, 256]
    assert report.horizon == 4
    assert report.sample_size == 256
    assert all(n.l2 <= n.l8 <= n.linf for n in report.norms)


def test_convergence_run_stops_when_the_sample_runs_out(d4, sym4_irreducible):
    report = convergence_run(None, d4, sym4_irreducible, 2, 4, sample=haar_sample(d4))
    assert [n.size for n in report.norms] == [2, 4, 5]
    assert report.norms[-1].linf == 0
    assert report.sample_size == 8
    assert report.empirical == report.theoretical


def test_convergence_run_rejects_bad_arguments(d4, sym4_irreducible):
    with pytest.raises(ValueError):
        convergence_run(None, d4, sym4_irreducible, 0, 4, sample=haar_sample(d4))
    with pytest.raises(ValueError):
        convergence_run(None, d4, sym4_irreducible, 4, 4)


def test_empirical_gram_is_symmetric(sym4_irreducible):
    E = empirical_gram(sample_primes(corpus_polynomial("sym4"), 64), sym4_irreducible)
    assert is_symmetric(E)
    assert E[0][0] == 1


def test_joint_gram_of_disjoint_fields():
    f = corpus_polynomial("sym4")
    g = parse_polynomial("x^2 + 1")
    report = joint_gram(f, g, resolve_basis("symmetric", 4), resolve_basis("symmetric", 2), 256)
    assert report.labels == ("f:1", "f:s1", "f:s2", "f:s3", "g:1", "g:s1")
    assert report.sample_size == 256
    assert len(report.cross_block) == 4
    assert report.cross_block[0][0] == 1
    assert is_symmetric(report.empirical)


M_PGL2_7_SYMMETRIC = (
    (1, 0, 0, 0, 1, 0, 0, 0),
    (0, 1, 0, 1, 1, 1, 0, 0),
    (0, 0, 3, 2, 1, 1, 1, 0),
    (0, 1, 2, 6, 4, 1, 1, 1),
    (1, 1, 1, 4, 6, 2, 1, 0),
    (0, 1, 1, 1, 2, 3, 0, 0),
    (0, 0, 1, 1, 1, 0, 1, 0),
    (0, 0, 0, 1, 0, 0, 0, 1),
)


def test_pgl2_7_symmetric_functions(pgl2_7):
    assert theoretical_gram(pgl2_7, resolve_basis("symmetric", 8)) == M_PGL2_7_SYMMETRIC


def test_agl3_2_symmetric_functions():
    basis = parse_basis("1, s1, s2, s3", 8)
    assert theoretical_gram(get_group("AGL3_2"), basis) == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 3))


def test_pgl2_7_rational_irreducibles_settle_after_four_batches(pgl2_7):
    basis = resolve_basis("rational-irreducible", 8, pgl2_7)
    report = convergence_run(corpus_polynomial("pgl2_7"), pgl2_7, basis, 128, 8)
    assert report.horizon == 8
    assert report.norms[0].linf > 0.5
    assert report.stable_at == 4


def test_psl2_7_irreducibles_are_stable_from_the_first_batch(psl2_7):
    report = convergence_run(corpus_polynomial("psl2_7"), psl2_7, resolve_basis("h1-irreducible", 8), 128, 8)
    assert report.stable_at == 1
    assert report.verdict == "consistent"


@pytest.mark.slow
def test_psl2_7_symmetric_functions_do_not_settle_within_8192_primes(psl2_7):
    basis = parse_basis("1, s1, s2, s3", 8)
    report = convergence_run(corpus_polynomial("psl2_7"), psl2_7, basis, 1024, 8)
    assert report.horizon == 8
    assert report.stable_at is None
    assert report.norms[0].linf > 1


@pytest.mark.slow
def test_sym8_symmetric_functions_are_stable_throughout():
    report = convergence_run(corpus_polynomial("sym8"), get_group("Sym8"), resolve_basis("symmetric", 8), 128, 8)
    assert report.stable_at == 1
    assert all(n.linf < 0.5 for n in report.norms)


def test_bordered_gram_skips_primes_dividing_the_discriminant():
    # 2 is unramified for x^4 + x + 1 but divides -4
    report = bordered_gram(corpus_polynomial("sym4"), resolve_basis("symmetric", 4), -4, 16)
    assert report.sample_size == 16
    assert report.empirical[-1][-1] == 1


@pytest.fixture(scope="module")
def d4_large_sample():
    return sample_primes(corpus_polynomial("d4"), 10_000)


def test_d4_kernel_vanishes_on_every_frobenius_point(d4, d4_large_sample):
    generators = kernel_ideal(d4, 2).generators
    assert generators
    points = {e.points[0] for e in d4_large_sample.entries}
    assert all(g.evaluate(pt) == 0 for g in generators for pt in points)


def test_d4_gram_rounds_to_the_group_matrix_at_ten_thousand_primes(d4, d4_large_sample, sym4_irreducible):
    report = gram_report(d4_large_sample, sym4_irreducible, d4)
    assert report.rounded == M_D4_DEGREE4
    assert report.ambiguous == ()
    assert report.verdict == "consistent"


def test_d4_cycle_type_frequencies_approach_the_haar_weights(d4, d4_large_sample):
    observed = cycle_type_frequencies(d4_large_sample)
    expected = aggregated_weights(d4)
    assert set(observed) == set(expected)
    for ct, w in expected.items():
        assert abs(float(observed[ct] - w)) < 0.02
