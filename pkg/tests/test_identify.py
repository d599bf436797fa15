# tests/test_identify.py
import pytest

from catalog import corpus_polynomial, get_group
from frobstats import (
    CandidateVerdict,
    IdentificationResult,
    exclude_by_kernel,
    haar_sample,
    identify_group,
    sample_primes,
)


def _result(*statuses):
    verdicts = tuple(CandidateVerdict(f"G{i}", s) for i, s in enumerate(statuses))
    return IdentificationResult("x", 8, verdicts)


def test_exit_codes():
    assert _result("consistent", "excluded").exit_code == 0
    assert _result("consistent", "consistent").exit_code == 10
    assert _result("mismatched", "excluded").exit_code == 11
    assert _result().best is None
    assert _result("mismatched", "consistent").best == "G1"


def test_sym4_data_excludes_d4(sym4, d4):
    sample = sample_primes(corpus_polynomial("sym4"), 16)
    witness = exclude_by_kernel(sample, d4)
    assert witness is not None
    assert witness.prime == 3
    assert witness.value != 0
    assert witness.generator.evaluate(sample.entries[1].point) == witness.value
    assert exclude_by_kernel(haar_sample(d4), sym4) is None


def test_haar_sym4_against_degree_four_candidates(sym4):
    names = ["Sym4", "A4", "D4", "C4", "V4"]
    result = identify_group(None, [get_group(n) for n in names], sample=haar_sample(sym4))
    assert result.exit_code == 0
    assert result.best == "Sym4"
    assert result.verdicts[0].linf == 0
    excluded = [v for v in result.verdicts if v.status == "excluded"]
    assert {v.group for v in excluded} == {"A4", "D4", "C4", "V4"}
    assert all(v.witness.prime == 0 for v in excluded)
    assert result.polynomial == "Sym4"
    assert result.sample_size == 24


def test_d4x8_and_q8_share_points_but_not_weights(d4x8, q8):
    result = identify_group(None, [q8, d4x8], sample=haar_sample(d4x8))
    assert result.best == "D4x8"
    assert result.exit_code == 0
    q8_verdict = next(v for v in result.verdicts if v.group == "Q8")
    assert q8_verdict.status == "mismatched"
    assert q8_verdict.witness is None
    assert q8_verdict.linf >= 0.5


def test_8t10_and_8t11_are_indistinguishable():
    t10, t11 = get_group("T8_10"), get_group("T8_11")
    result = identify_group(None, [t10, t11], sample=haar_sample(t10))
    assert result.exit_code == 10
    assert result.consistent == ("T8_10", "T8_11")
    assert result.indistinguishable == (("T8_10", "T8_11"),)


def test_no_consistent_candidate(sym4, d4):
    result = identify_group(None, [sym4], sample=haar_sample(d4))
    assert result.exit_code == 11
    assert result.verdicts[0].status == "mismatched"


def test_identify_rejects_bad_input(d4, d4x8):
    with pytest.raises(ValueError):
        identify_group(None, [], sample=haar_sample(d4))
    with pytest.raises(ValueError):
        identify_group(None, [d4])
    with pytest.raises(ValueError):
        identify_group(None, [d4x8], sample=haar_sample(d4))
