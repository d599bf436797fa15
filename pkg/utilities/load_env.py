# utilities/load_env.py

import logging
import os

from dotenv import find_dotenv, load_dotenv

logger = logging.getLogger(__name__)

_INT_VARIABLES = (
    "FROBCHAR_ENUMERATION_CAP",
    "FROBCHAR_WORKERS",
    "FROBCHAR_DEGREE_BOUND",
)


def load_environment() -> None:
    """
    Load environment variables from .env (if present) and validate them.
    Raises ValueError when a numeric setting is present but not a positive integer.
    """
    logger.info("Loading environment variables.")

    # Existing variables win over the .env file.
    env_path = find_dotenv(usecwd=True)
    if env_path:
        load_dotenv(env_path, override=False)
        logger.debug("Loaded .env from %s", env_path)
    else:
        logger.debug(".env file not found; continuing with existing environment variables")

    for name in _INT_VARIABLES:
        raw = os.getenv(name)
        if raw is None or not raw.strip():
            continue
        try:
            ok = int(raw.strip()) >= 1
        except ValueError:
            ok = False
        if not ok:
            logger.error("%s must be a positive integer, got %r", name, raw)
            raise ValueError(f"{name} must be a positive integer, got {raw!r}")

    logger.info("Environment loaded.")
