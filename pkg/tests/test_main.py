# tests/test_main.py
import json

import pytest

import main


@pytest.fixture(autouse=True)
def no_dotenv(tmp_path, monkeypatch):
    # keep a developer .env out of the run
    monkeypatch.chdir(tmp_path)
    monkeypatch.setattr("utilities.load_env.find_dotenv", lambda usecwd=True: "")


def test_describe_exit_code():
    assert main.describe_exit_code("main", 10) == "Several candidate groups remain consistent."
    assert main.describe_exit_code("main", 99) == "Unknown exit code 99."
    assert main.describe_exit_code("nowhere", 0) == "Unknown exit code 0."


def test_main_runs_a_subcommand(capsys):
    assert main.main(["catalog"]) == 0
    captured = capsys.readouterr()
    assert "D4" in [g["name"] for g in json.loads(captured.out)["groups"]]
    assert "[main] Command finished successfully. (code=0)" in captured.err


def test_main_reports_identify_codes(capsys):
    assert main.main(["identify", "--haar", "T8_10", "--candidates", "T8_10,T8_11"]) == 10
    assert "(code=10)" in capsys.readouterr().err


def test_bad_environment_stops_setup(monkeypatch, capsys):
    monkeypatch.setenv("FROBCHAR_WORKERS", "none")
    assert main.main(["catalog"]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "[setup]" in captured.err


def test_argparse_errors_return_their_code():
    assert main.main([]) == 2
    assert main.main(["--help"]) == 0


def test_keyboard_interrupt(mocker, capsys):
    mocker.patch("cli.commands.dispatch", side_effect=KeyboardInterrupt)
    assert main.main(["catalog"]) == 2
    assert "interrupted by the user. (code=2)" in capsys.readouterr().err
