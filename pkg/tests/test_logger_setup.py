# tests/test_logger_setup.py
import logging

from utilities.logger_setup import setup_logger


def test_setup_logger_uses_requested_level():
    setup_logger("DEBUG")
    assert logging.getLogger().level == logging.DEBUG
    setup_logger("WARNING")
    assert logging.getLogger().level == logging.WARNING


def test_setup_logger_adds_file_handler(tmp_path):
    path = tmp_path / "run.log"
    setup_logger("INFO", str(path))
    logging.getLogger("frobchar.test").info("hello from the test")
    for handler in logging.getLogger().handlers:
        handler.flush()
    assert "hello from the test" in path.read_text(encoding="utf-8")
    setup_logger("WARNING")


def test_setup_logger_reads_environment(monkeypatch):
    monkeypatch.setenv("FROBCHAR_LOG_LEVEL", "ERROR")
    setup_logger()
    assert logging.getLogger().level == logging.ERROR
    setup_logger("WARNING")
