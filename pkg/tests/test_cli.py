# tests/test_cli.py
import io
import json

import pytest

from cli.commands import run
from cli.config import RunConfig, UsageError


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_sample_csv_has_one_row_per_prime():
    code, text = _run("sample", "x^4 + x + 1", "--count", "16", "--format", "csv")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "p,cycle_type,svector"
    assert len(lines) == 17


def test_sample_json_with_basis():
    code, text = _run("sample", "x^4 - 2x^2 + 2", "--primes", "4", "--basis", "symmetric")
    data = json.loads(text)
    assert code == 0
    assert data["skipped"] == [2]
    assert data["labels"] == ["1", "s1", "s2", "s3"]
    assert len(data["entries"]) == 4
    assert len(data["entries"][0]["values"]) == 4


def test_output_is_reproducible():
    first = _run("gram", "x^4 + x + 1", "--group", "Sym4", "--count", "64")
    second = _run("gram", "x^4 + x + 1", "--group", "Sym4", "--count", "64")
    assert first == second
    data = json.loads(first[1])
    assert data["group"] == "Sym4"
    assert data["verdict"] in ("consistent", "mismatched")


@pytest.mark.parametrize(
    "argv",
    [
        ["sample"],
        ["sample", "x^4 + 1", "--count", "0"],
        ["sample", "x^^2"],
        ["sample", "x^4 + 1", "--format", "xml"],
        ["convergence", "x^4 + 1"],
        ["gram", "x^4 + x + 1", "--group", "Sym99"],
        ["gram", "x^4 + x + 1", "--basis", "q8-reduced"],
        ["compare", "x^4 + 1", "x^2 + 1", "--groups", "D4"],
        ["chartable"],
        ["nonsense"],
    ],
)
def test_usage_errors(argv):
    assert _run(*argv)[0] == 2


def test_repeated_roots_are_a_polynomial_error():
    assert _run("sample", "x^2 - 2x + 1", "--count", "4")[0] == 3


def test_group_too_large(monkeypatch):
    monkeypatch.setenv("FROBCHAR_ENUMERATION_CAP", "10")
    assert _run("chartable", "--group", "Sym4")[0] == 4


@pytest.mark.parametrize(
    "haar, candidates, expected",
    [
        ("Sym4", "deg4", 0),
        ("T8_10", "T8_10,T8_11", 10),
        ("D4", "Sym4", 11),
    ],
)
def test_identify_exit_codes(haar, candidates, expected):
    code, text = _run("identify", "--haar", haar, "--candidates", candidates)
    assert code == expected
    assert json.loads(text)["polynomial"] == haar


def test_identify_table_format():
    code, text = _run("identify", "--haar", "D4", "--candidates", "deg4", "--format", "table")
    assert code == 0
    assert text.splitlines()[0] == "D4  (8 primes)"
    assert "excluded" in text


def test_kernel_table():
    code, text = _run("kernel", "--group", "D4", "--format", "table")
    assert code == 0
    assert text.splitlines()[0] == "I(D4) up to degree 2:"
    assert len(text.splitlines()) > 1


def test_chartable_export_and_import(tmp_path):
    path = tmp_path / "sym4.json"
    code, text = _run("chartable", "--group", "Sym4", "--export", str(path))
    assert code == 0
    assert len(json.loads(text)["classes"]) == 5
    code, again = _run("chartable", "--import", str(path))
    assert code == 0
    assert json.loads(again)["characters"] == json.loads(text)["characters"]


def test_compare_with_kronecker_border():
    code, text = _run("compare", "x^4 - 2x^2 + 2", "x^2 + 1", "--kronecker", "-4", "--count", "32")
    assert code == 0
    data = json.loads(text)
    assert data["labels"][-1] == "kron(-4)"
    assert "cross_block" in data


def test_catalog_table():
    code, text = _run("catalog", "--format", "table")
    assert code == 0
    assert "set deg4: Sym4, A4, D4, C4, V4" in text


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig("sample")
    with pytest.raises(UsageError):
        RunConfig("sample", ("x^2 + 1",), start=1)
    assert RunConfig("identify", haar="D4").count == 128


def test_workers_flag_overrides_environment(monkeypatch, mocker):
    monkeypatch.setenv("FROBCHAR_WORKERS", "3")
    sampler = mocker.patch("cli.commands.sample_primes", side_effect=ValueError("stop"))
    assert _run("sample", "x^4 + x + 1", "--workers", "2")[0] == 2
    assert sampler.call_args.args[3] == 2


def test_convergence_table_and_plot(tmp_path):
    plot = tmp_path / "d4.png"
    code, text = _run(
        "convergence", "x^4 - 2x^2 + 2", "--group", "D4", "--basis", "sym4-irreducible",
        "--increment", "32", "--batches", "3", "--format", "table", "--plot", str(plot),
    )
    assert code == 0
    lines = text.splitlines()
    assert len(lines) == 4
    assert lines[0].startswith("  1: ")
    assert plot.exists()


def test_convergence_csv_columns():
    code, text = _run("convergence", "x^4 + x + 1", "--group", "Sym4", "--increment", "16", "--batches", "2", "--format", "csv")
    assert code == 0
    assert text.splitlines()[0] == "batch,size,l2,l8,linf"
    assert len(text.splitlines()) == 3
