# main.py
"""frobenius-characters - CLI entrypoint.

Sets up logging and the environment, then runs one subcommand of
:mod:`cli.commands`. Reports go to stdout; logs and exit-code summaries go
to stderr so that reports stay byte-identical between runs.

Usage examples (from project root):
    poetry run python main.py sample "x^4 + x + 1" --count 16
    poetry run python main.py gram "x^8 + 6x^4 + 1" --group D4x8 --basis d4x8-reduced --primes 80
    poetry run python main.py identify "x^4 - 2x^2 + 2" --candidates deg4
    poetry run python main.py kernel --group D4 --degree-bound 2
    poetry run python main.py catalog --format table

The docstrings use reST field lists so Sphinx autodoc renders them directly.
"""
import logging
import sys
from typing import List, Optional

from utilities.logger_setup import setup_logger

# --------------------------
# Exit-code descriptions
# --------------------------
_EXIT_DESCRIPTIONS = {
    "setup": {
        0: "Environment loaded: OK.",
        2: "Environment load failed (e.g., FROBCHAR_WORKERS is not a positive integer).",
    },
    "main": {
        0: "Command finished successfully.",
        2: "Usage, parse or input error, or interrupted by the user.",
        3: "Polynomial precondition failed (repeated roots or ramification).",
        4: "Group too large to enumerate; supply class data with --import.",
        10: "Several candidate groups remain consistent.",
        11: "No candidate group is consistent.",
    },
}


def describe_exit_code(context: str, code: int) -> str:
    """Return a human-readable description for a given exit code in a context."""
    return _EXIT_DESCRIPTIONS.get(context, {}).get(code, f"Unknown exit code {code}.")


def report_exit_code(context: str, code: int) -> None:
    """Log and print (to stderr) a description of the exit code for the given context."""
    msg = describe_exit_code(context, code)
    logging.getLogger(__name__).info("[%s] %s (code=%s)", context, msg, code)
    print(f"[{context}] {msg} (code={code})", file=sys.stderr)


def main_setup(level: Optional[str] = None) -> int:
    """Set up logging and environment for the application.

    :param level: log level name overriding ``FROBCHAR_LOG_LEVEL``
    :returns: 0 on success, 2 if environment loading failed
    :rtype: int
    """
    # Configure logging first so loggers created below inherit handlers/formatters.
    setup_logger(level)
    logger = logging.getLogger(__name__)

    from utilities.load_env import load_environment

    try:
        load_environment()
    except ValueError as e:
        logger.error("Error loading environment: %s", e)
        return 2
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    """Parse the command line, set up, and run the requested subcommand.

    :param argv: arguments without the program name; ``sys.argv[1:]`` when ``None``
    :returns: exit code suitable for ``sys.exit()``
    :rtype: int
    """
    from cli.commands import build_parser, dispatch

    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    exit_code = main_setup(args.log_level)
    if exit_code != 0:
        report_exit_code("setup", exit_code)
        return exit_code

    try:
        exit_code = dispatch(args)
    except KeyboardInterrupt:
        logging.getLogger(__name__).info("Interrupted by user (KeyboardInterrupt).")
        exit_code = 2
    report_exit_code("main", exit_code)
    logging.shutdown()
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
