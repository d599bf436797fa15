# tests/conftest.py
"""
Project-wide pytest fixtures for the test suite.

Every test runs with the FROBCHAR_* variables removed, so results never
depend on the developer machine. Catalog groups are closed once per session;
:func:`catalog.get_group` caches them, the fixtures only give them names.
"""

import os

import pytest

import catalog


@pytest.fixture(autouse=True)
def isolate_env(monkeypatch):
    """
    Automatically run for every test to provide environment isolation.

    Uses pytest's `monkeypatch` fixture so every deletion is undone after the test.
    """
    for name in list(os.environ):
        if name.startswith("FROBCHAR_"):
            monkeypatch.delenv(name, raising=False)
    yield


@pytest.fixture
def custom_catalog_dir(tmp_path, monkeypatch):
    """Point FROBCHAR_CATALOG_DIR at an empty temp directory and drop cached catalog data."""
    monkeypatch.setenv("FROBCHAR_CATALOG_DIR", str(tmp_path))
    catalog.clear_cache()
    yield tmp_path
    monkeypatch.delenv("FROBCHAR_CATALOG_DIR", raising=False)
    catalog.clear_cache()


@pytest.fixture(scope="session")
def sym4():
    return catalog.get_group("Sym4")


@pytest.fixture(scope="session")
def d4():
    return catalog.get_group("D4")


@pytest.fixture(scope="session")
def d4x8():
    return catalog.get_group("D4x8")


@pytest.fixture(scope="session")
def q8():
    return catalog.get_group("Q8")


@pytest.fixture(scope="session")
def psl2_7():
    return catalog.get_group("PSL2_7")


@pytest.fixture(scope="session")
def pgl2_7():
    return catalog.get_group("PGL2_7")


@pytest.fixture(scope="session")
def sym4_table(sym4):
    from chartab import character_table

    return character_table(sym4)
