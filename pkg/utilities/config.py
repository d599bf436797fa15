# utilities/config.py
"""Environment-driven configuration.

Every getter reads :mod:`os.environ` on each call, so tests can adjust the
environment with ``monkeypatch``. Invalid values never raise here; they are
logged and replaced by the documented default.
"""

import logging
import os
from typing import Optional

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 1_000_000
DEFAULT_DEGREE_BOUND = 2
_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


def parse_bool_env(name: str, default: bool = False) -> bool:
    """Parse a boolean environment variable.

    :param name: Environment variable name to read.
    :param default: Value to use if the variable is unset.
    :returns: ``True`` for ``1/true/yes/y/on/t`` (case-insensitive), else ``False``.
    """
    val = os.getenv(name, str(default))
    return str(val).strip().lower() in {"1", "true", "yes", "y", "on", "t"}


def _positive_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.strip())
        if value < 1:
            raise ValueError("must be >= 1")
        return value
    except ValueError as exc:
        logger.warning("Invalid %s=%r (%s); using default %s", name, raw, exc, default)
        return default


def get_enumeration_cap(default: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Largest group order that is enumerated element by element (``FROBCHAR_ENUMERATION_CAP``)."""
    return _positive_int("FROBCHAR_ENUMERATION_CAP", default)


def get_workers(default: int = 1) -> int:
    """Number of worker processes used for prime sampling (``FROBCHAR_WORKERS``)."""
    return _positive_int("FROBCHAR_WORKERS", default)


def get_degree_bound(default: int = DEFAULT_DEGREE_BOUND) -> int:
    """Default monomial degree bound for interpolation and kernel ideals."""
    return _positive_int("FROBCHAR_DEGREE_BOUND", default)


def get_log_level(default: str = "WARNING") -> str:
    raw = os.getenv("FROBCHAR_LOG_LEVEL")
    if raw is None:
        return default
    level = raw.strip().upper()
    if level not in _LOG_LEVELS:
        logger.warning("Invalid FROBCHAR_LOG_LEVEL=%r; using %s", raw, default)
        return default
    return level


def get_log_file() -> Optional[str]:
    raw = os.getenv("FROBCHAR_LOG_FILE", "").strip()
    return raw or None


def get_catalog_dir() -> Optional[str]:
    """Directory searched before the bundled catalog data (``FROBCHAR_CATALOG_DIR``)."""
    raw = os.getenv("FROBCHAR_CATALOG_DIR", "").strip()
    return raw or None
