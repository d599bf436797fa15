# cli/config.py
"""Run configuration assembled from command-line flags and the environment.

Flags win; anything left unset falls back to the ``FROBCHAR_*`` getters in
:mod:`utilities.config`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

from utilities.config import get_degree_bound, get_workers

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "table")

DEFAULT_COUNT = 128
DEFAULT_IDENTIFY_COUNT = 1024
DEFAULT_INCREMENT = 128
DEFAULT_BATCHES = 8


class UsageError(ValueError):
    """Flags that are individually valid but do not fit together."""


@dataclass(frozen=True)
class RunConfig:
    """Everything one subcommand needs.

    :param polynomials: raw polynomial texts, parsed by the handler
    :param group: catalog group name or a JSON group file
    :param import_path: imported class data used in place of ``group``
    :param basis: preset name or comma-separated s-polynomials
    """

    command: str
    polynomials: Tuple[str, ...] = ()
    group: Optional[str] = None
    import_path: Optional[str] = None
    basis: Optional[str] = None
    count: int = DEFAULT_COUNT
    start: int = 2
    increment: int = DEFAULT_INCREMENT
    batches: int = DEFAULT_BATCHES
    candidates: Optional[str] = None
    haar: Optional[str] = None
    degree_bound: int = field(default_factory=get_degree_bound)
    output_format: str = "json"
    workers: int = field(default_factory=get_workers)
    plot: Optional[str] = None
    rational: bool = False
    export: Optional[str] = None
    groups: Optional[str] = None
    kronecker: Optional[int] = None
    with_classes: bool = False

    def __post_init__(self):
        if self.output_format not in FORMATS:
            raise UsageError(f"unknown format {self.output_format!r}; choose from {', '.join(FORMATS)}")
        for name in ("count", "increment", "batches", "degree_bound", "workers"):
            if getattr(self, name) < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be at least 1")
        if self.start < 2:
            raise UsageError("--start must be at least 2")
        needed = {"compare": 2, "sample": 1, "gram": 1, "convergence": 1}.get(self.command)
        if self.command == "identify":
            needed = 0 if self.haar else 1
        if needed is not None and len(self.polynomials) != needed:
            raise UsageError(f"{self.command} takes exactly {needed} polynomial(s), got {len(self.polynomials)}")


def _flag(args, name: str, default=None):
    # a flag given as 0 must reach validation, so only None falls back
    value = getattr(args, name, None)
    return default if value is None else value


def build_run_config(args) -> RunConfig:
    """Map parsed arguments onto a :class:`RunConfig`, filling gaps from the environment."""
    default_count = DEFAULT_IDENTIFY_COUNT if args.command == "identify" else DEFAULT_COUNT
    config = RunConfig(
        command=args.command,
        polynomials=tuple(_flag(args, "polynomials", ())),
        group=_flag(args, "group"),
        import_path=_flag(args, "import_path"),
        basis=_flag(args, "basis"),
        count=_flag(args, "count", default_count),
        start=_flag(args, "start", 2),
        increment=_flag(args, "increment", DEFAULT_INCREMENT),
        batches=_flag(args, "batches", DEFAULT_BATCHES),
        candidates=_flag(args, "candidates"),
        haar=_flag(args, "haar"),
        degree_bound=_flag(args, "degree_bound", get_degree_bound()),
        output_format=_flag(args, "format", "json"),
        workers=_flag(args, "workers", get_workers()),
        plot=_flag(args, "plot"),
        rational=bool(_flag(args, "rational", False)),
        export=_flag(args, "export"),
        groups=_flag(args, "groups"),
        kronecker=_flag(args, "kronecker"),
        with_classes=bool(_flag(args, "classes", False)),
    )
    logger.debug("run config: %s", config)
    return config
