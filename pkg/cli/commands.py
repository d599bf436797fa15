# cli/commands.py
"""Argument parser and one handler per subcommand.

Handlers take a :class:`cli.config.RunConfig` and a text stream, write their
report to the stream and return the process exit code. Failures are mapped
onto exit codes in :func:`dispatch`:

* 2 usage, parse or input error
* 3 polynomial precondition (repeated roots, ramification)
* 4 group too large to enumerate
* 10 / 11 several / no consistent candidates (``identify`` only)
"""

from __future__ import annotations

import argparse
import logging
import sys
import traceback
from pathlib import Path
from typing import Callable, Dict, List, Optional, TextIO

import pandas as pd

from catalog import CatalogError, candidate_set, get_group, list_catalog
from chartab import (
    RationalCharacterTable,
    TableImportError,
    character_table,
    export_table,
    import_table,
    rational_character_table,
    table_to_dict,
)
from charparam import kernel_ideal
from frobstats import (
    BasisError,
    bordered_gram,
    convergence_run,
    gram_report,
    haar_sample,
    identify_group,
    joint_gram,
    resolve_basis,
    sample_primes,
)
from frobstats import reports
from permcore import ClassDataError, GroupTooLargeError, load_group_file, load_imported_group
from polyarith import IntPolynomial, PolynomialError, parse_polynomial

from .config import FORMATS, RunConfig, UsageError, build_run_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_POLYNOMIAL = 3
EXIT_TOO_LARGE = 4


def _parse(text: str) -> IntPolynomial:
    try:
        return parse_polynomial(text)
    except PolynomialError as exc:
        raise UsageError(str(exc)) from exc


def _resolve_group(config: RunConfig, required: bool = False):
    """Imported class data, a JSON group file, or a catalog group, in that order."""
    if config.import_path:
        return load_imported_group(config.import_path)
    if config.group:
        if config.group.endswith(".json") and Path(config.group).exists():
            return load_group_file(config.group)
        return get_group(config.group)
    if required:
        raise UsageError(f"{config.command} needs --group or --import")
    return None


def _matrix_frame(M, labels) -> pd.DataFrame:
    return pd.DataFrame(
        [[reports.fraction_text(v) for v in row] for row in M], index=list(labels), columns=list(labels)
    )


def _write_gram(report, config: RunConfig, out: TextIO) -> None:
    if config.output_format == "json":
        out.write(reports.dumps(reports.gram_report_to_dict(report)))
    elif config.output_format == "table":
        out.write(reports.gram_table(report))
    else:
        out.write(_matrix_frame(report.empirical, report.labels).to_csv(lineterminator="\n"))


def cmd_sample(config: RunConfig, out: TextIO) -> int:
    f = _parse(config.polynomials[0])
    sample = sample_primes(f, config.count, config.start, config.workers)
    basis = resolve_basis(config.basis, f.degree, _resolve_group(config)) if config.basis else None
    if config.output_format == "json":
        data = reports.sample_to_dict(sample)
        if basis is not None:
            data["labels"] = list(basis.labels)
            for row, e in zip(data["entries"], sample.entries):
                row["values"] = [reports.fraction_text(v) for v in basis.evaluate(e)]
        out.write(reports.dumps(data))
    else:
        frame = reports.sample_frame(sample, basis)
        out.write(reports.frame_csv(frame) if config.output_format == "csv" else frame.to_string(index=False) + "\n")
    return EXIT_OK


def cmd_gram(config: RunConfig, out: TextIO) -> int:
    f = _parse(config.polynomials[0])
    G = _resolve_group(config)
    basis = resolve_basis(config.basis or "symmetric", f.degree, G)
    sample = sample_primes(f, config.count, config.start, config.workers)
    report = gram_report(sample, basis, G)
    _write_gram(report, config, out)
    return EXIT_OK


def cmd_convergence(config: RunConfig, out: TextIO) -> int:
    f = _parse(config.polynomials[0])
    G = _resolve_group(config, required=True)
    basis = resolve_basis(config.basis or "symmetric", f.degree, G)
    report = convergence_run(f, G, basis, config.increment, config.batches, workers=config.workers)
    if config.plot:
        reports.plot_convergence(report, config.plot)
    if config.output_format == "json":
        out.write(reports.dumps(reports.gram_report_to_dict(report)))
    elif config.output_format == "table":
        out.write(reports.norm_table(report))
    else:
        out.write(reports.frame_csv(reports.convergence_frame(report)))
    return EXIT_OK


def cmd_identify(config: RunConfig, out: TextIO) -> int:
    if config.haar:
        f = None
        source = get_group(config.haar)
        sample = haar_sample(source)
        degree = source.degree
    else:
        f = _parse(config.polynomials[0])
        sample = None
        degree = f.degree
    names = candidate_set(config.candidates or f"deg{degree}")
    candidates = [get_group(name) for name in names]
    result = identify_group(
        f, candidates, config.count, sample=sample, degree_bound=config.degree_bound, workers=config.workers
    )
    if config.output_format == "table":
        out.write(reports.identification_table(result))
    else:
        out.write(reports.dumps(reports.identification_to_dict(result)))
    return result.exit_code


def cmd_kernel(config: RunConfig, out: TextIO) -> int:
    G = _resolve_group(config, required=True)
    ideal = kernel_ideal(G, config.degree_bound)
    if config.output_format == "table":
        out.write(f"I({ideal.group_name}) up to degree {ideal.degree_bound}:\n")
        out.writelines(f"  {g}\n" for g in ideal.generators)
    else:
        out.write(
            reports.dumps(
                {
                    "group": ideal.group_name,
                    "degree_bound": ideal.degree_bound,
                    "generators": [str(g) for g in ideal.generators],
                    "generic_relations": len(ideal.relations),
                    "points": [str(p) for p in ideal.points],
                }
            )
        )
    return EXIT_OK


def cmd_chartable(config: RunConfig, out: TextIO) -> int:
    if config.import_path:
        # an external table file; import_table verifies it
        T = import_table(config.import_path)
    else:
        if not config.group:
            raise UsageError("chartable needs --group or --import")
        T = character_table(_resolve_group(config))
    if config.rational and not isinstance(T, RationalCharacterTable):
        T = rational_character_table(T)
    if config.export:
        export_table(T, config.export)
    data = table_to_dict(T)
    if config.output_format == "table":
        sizes = [str(c["size"]) for c in data["classes"]]
        rows = [[str(v) for v in row] for row in data["characters"]]
        width = max(len(c) for c in sizes + [v for row in rows for v in row])
        out.write(" ".join(s.rjust(width) for s in sizes) + "\n")
        out.writelines(" ".join(v.rjust(width) for v in row) + "\n" for row in rows)
    else:
        out.write(reports.dumps(data))
    return EXIT_OK


def cmd_compare(config: RunConfig, out: TextIO) -> int:
    f, g = (_parse(t) for t in config.polynomials)
    spec = config.basis or "symmetric"
    names = [n.strip() for n in config.groups.split(",")] if config.groups else []
    if names and len(names) != 2:
        raise UsageError("--groups takes two comma-separated names")
    G_f, G_g = (get_group(n) for n in names) if names else (None, None)
    basis_f = resolve_basis(spec, f.degree, G_f)
    if config.kronecker is not None:
        report = bordered_gram(f, basis_f, config.kronecker, config.count, g, config.start, config.workers)
    else:
        basis_g = resolve_basis(spec, g.degree, G_g)
        report = joint_gram(f, g, basis_f, basis_g, config.count, config.start, config.workers)
    _write_gram(report, config, out)
    return EXIT_OK


def cmd_catalog(config: RunConfig, out: TextIO) -> int:
    data = list_catalog(with_classes=config.with_classes)
    if config.output_format == "table":
        for row in data["groups"]:
            extra = f" {row['classes']:>3} classes" if "classes" in row else ""
            out.write(f"{row['name']:<8} degree {row['degree']}  order {row['order']:>6}{extra}  {row['description']}\n")
        for name, members in data["candidate_sets"].items():
            out.write(f"set {name}: {', '.join(members)}\n")
        out.write(f"presets: {', '.join(data['presets'])}\n")
        for row in data["polynomials"]:
            out.write(f"{row['name']:<8} {row['group']:<8} {row['polynomial']}\n")
    else:
        out.write(reports.dumps(data))
    return EXIT_OK


COMMANDS: Dict[str, Callable[[RunConfig, TextIO], int]] = {
    "sample": cmd_sample,
    "gram": cmd_gram,
    "convergence": cmd_convergence,
    "identify": cmd_identify,
    "kernel": cmd_kernel,
    "chartable": cmd_chartable,
    "compare": cmd_compare,
    "catalog": cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobenius-characters",
        description="Galois groups from Frobenius statistics and character inner products",
    )
    parser.add_argument("--log-level", help="overrides FROBCHAR_LOG_LEVEL")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, help="report format (default json)")
    common.add_argument("--workers", type=int, help="worker processes, overrides FROBCHAR_WORKERS")

    def group_flags(p):
        p.add_argument("--group", help="catalog group name or JSON group file")
        p.add_argument("--import", dest="import_path", metavar="PATH", help="imported class data (JSON)")

    def sample_flags(p):
        p.add_argument("--count", "--primes", dest="count", type=int, help="number of unramified primes")
        p.add_argument("--start", type=int, help="smallest prime considered (default 2)")
        p.add_argument("--basis", help="preset name or comma-separated s-polynomials")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", parents=[common], help="Frobenius cycle types and class points")
    p.add_argument("polynomials", nargs=1, metavar="POLY")
    sample_flags(p)
    group_flags(p)

    p = sub.add_parser("gram", parents=[common], help="empirical Gram matrix, compared with a group")
    p.add_argument("polynomials", nargs=1, metavar="POLY")
    sample_flags(p)
    group_flags(p)

    p = sub.add_parser("convergence", parents=[common], help="error norms over growing samples")
    p.add_argument("polynomials", nargs=1, metavar="POLY")
    p.add_argument("--basis", help="preset name or comma-separated s-polynomials")
    p.add_argument("--increment", type=int, help="primes per batch (default 128)")
    p.add_argument("--batches", type=int, help="number of batches (default 8)")
    p.add_argument("--plot", metavar="PNG", help="write a norm plot")
    group_flags(p)

    p = sub.add_parser("identify", parents=[common], help="rank candidate Galois groups")
    p.add_argument("polynomials", nargs="*", metavar="POLY")
    p.add_argument("--count", "--primes", dest="count", type=int, help="number of primes (default 1024)")
    p.add_argument("--candidates", help="candidate set name or comma list (default deg<n>)")
    p.add_argument("--degree-bound", type=int, help="kernel ideal degree bound for witnesses")
    p.add_argument("--haar", metavar="GROUP", help="use the exact Haar data of a catalog group instead of primes")

    p = sub.add_parser("kernel", parents=[common], help="kernel ideal generators of a group")
    p.add_argument("--degree-bound", type=int, help="monomial degree bound")
    group_flags(p)

    p = sub.add_parser("chartable", parents=[common], help="character table of a group")
    p.add_argument("--group", help="catalog group name or JSON group file")
    p.add_argument("--import", dest="import_path", metavar="PATH", help="verify and show an external table")
    p.add_argument("--rational", action="store_true", help="rational character table")
    p.add_argument("--export", metavar="PATH", help="write the table as JSON")

    p = sub.add_parser("compare", parents=[common], help="joint Gram matrix of two polynomials")
    p.add_argument("polynomials", nargs=2, metavar="POLY")
    sample_flags(p)
    p.add_argument("--groups", metavar="GF,GG", help="groups for group-dependent presets")
    p.add_argument("--kronecker", type=int, metavar="D", help="border the first basis with kron(D)")

    p = sub.add_parser("catalog", parents=[common], help="list bundled groups, presets and polynomials")
    p.add_argument("--classes", action="store_true", help="close every group to count its classes")
    return parser


def dispatch(args, out: Optional[TextIO] = None) -> int:
    """Run the parsed subcommand and map failures onto exit codes."""
    out = out or sys.stdout
    context = getattr(args, "command", "cli")
    try:
        config = build_run_config(args)
        return COMMANDS[config.command](config, out)
    except GroupTooLargeError as exc:
        logger.error("%s", exc)
        print(f"[{context}] {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except PolynomialError as exc:
        logger.error("%s", exc)
        print(f"[{context}] {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_POLYNOMIAL
    except (UsageError, CatalogError, BasisError, ClassDataError, TableImportError, ValueError) as exc:
        logger.error("%s", exc)
        print(f"[{context}] {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:
        logger.exception("Unexpected failure in %s", context)
        tb = "".join(traceback.format_exception(type(exc), exc, exc.__traceback__))
        print(f"[{context}] {type(exc).__name__}: {exc}\n{tb}", file=sys.stderr)
        return EXIT_USAGE


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """Parse ``argv`` and dispatch; argparse errors give exit code 2."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return dispatch(args, out)
