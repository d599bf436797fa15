# utilities/logger_setup.py

import logging
from typing import Optional

from utilities.config import get_log_file, get_log_level

# Other modules only need:
# logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s:%(lineno)d %(message)s"


def setup_logger(level: Optional[str] = None, log_file: Optional[str] = None):
    """Configure the root logger once for the whole process.

    Console output goes to stderr so that reports written to stdout stay
    byte-identical between runs. A file handler is added only when a log
    file is configured (argument or ``FROBCHAR_LOG_FILE``).

    :param level: level name such as ``"INFO"``; falls back to ``FROBCHAR_LOG_LEVEL``
    :param log_file: optional path of an append-mode log file
    :returns: the module logger
    """
    level_name = (level or get_log_level()).upper()
    handlers: list[logging.Handler] = [logging.StreamHandler()]
    path = log_file or get_log_file()
    if path:
        handlers.append(logging.FileHandler(path, mode="a", encoding="utf-8"))

    logging.basicConfig(
        level=getattr(logging, level_name, logging.WARNING),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
    return logging.getLogger(__name__)
