# frobstats/reports.py
"""Rendering of samples, Gram reports and identifications.

Rationals are written as ``"num/den"`` strings (plain integers when the
denominator is 1) and floats with six decimals, so equal inputs give
byte-identical output.
"""

from __future__ import annotations

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .basis import TestBasis
from .gram import GramReport
from .identify import IdentificationResult
from .sampling import PrimeSample

logger = logging.getLogger(__name__)

FLOAT_DIGITS = 6


def fraction_text(value) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _float(value: float) -> float:
    return round(float(value), FLOAT_DIGITS)


def _matrix_text(M) -> List[List[str]]:
    return [[fraction_text(v) for v in row] for row in M]


def dumps(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def gram_report_to_dict(report: GramReport) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "polynomials": list(report.polynomials),
        "labels": list(report.labels),
        "sample_size": report.sample_size,
        "empirical": _matrix_text(report.empirical),
        "rounded": [list(r) for r in report.rounded],
        "ambiguous": [list(p) for p in report.ambiguous],
    }
    if report.theoretical is not None:
        out["group"] = report.group
        out["theoretical"] = _matrix_text(report.theoretical)
        out["norms"] = [
            {"batch": n.batch, "size": n.size, "l2": _float(n.l2), "l8": _float(n.l8), "linf": _float(n.linf)}
            for n in report.norms
        ]
        out["stable_at"] = report.stable_at
        out["horizon"] = report.horizon
        out["verdict"] = report.verdict
    if report.cross_block is not None:
        out["cross_block"] = _matrix_text(report.cross_block)
    return out


def identification_to_dict(result: IdentificationResult) -> Dict[str, Any]:
    verdicts = []
    for v in result.verdicts:
        row: Dict[str, Any] = {"group": v.group, "status": v.status}
        if v.witness is not None:
            row["witness"] = {
                "prime": v.witness.prime,
                "generator": str(v.witness.generator),
                "value": fraction_text(v.witness.value),
            }
        if v.linf is not None:
            row["linf"] = _float(v.linf)
            row["basis"] = list(v.basis)
        verdicts.append(row)
    out: Dict[str, Any] = {
        "polynomial": result.polynomial,
        "sample_size": result.sample_size,
        "best": result.best,
        "verdicts": verdicts,
    }
    if result.indistinguishable:
        out["indistinguishable"] = [list(names) for names in result.indistinguishable]
        out["note"] = "indistinguishable by cycle data: same class points and Haar weights"
    return out


def norm_table(report: GramReport) -> str:
    """Three-column norm table, one line per batch: ``k: l2 < l8 < linf``."""
    lines = [f"{n.batch:>3}: {n.l2:.6f} < {n.l8:.6f} < {n.linf:.6f}" for n in report.norms]
    if report.norms:
        if report.stable_at is None:
            lines.append(f"not stable within {report.horizon} batches")
        else:
            lines.append(f"stable from batch {report.stable_at} (horizon {report.horizon})")
    return "\n".join(lines) + "\n"


def matrix_table(M, labels: Optional[Sequence[str]] = None) -> str:
    cells = _matrix_text(M)
    width = max((len(c) for row in cells for c in row), default=1)
    if labels:
        width = max(width, max(len(l) for l in labels))
    lines = []
    if labels:
        pad = max(len(l) for l in labels)
        lines.append(" " * pad + "  " + " ".join(l.rjust(width) for l in labels))
        for lab, row in zip(labels, cells):
            lines.append(lab.ljust(pad) + "  " + " ".join(c.rjust(width) for c in row))
    else:
        lines.extend(" ".join(c.rjust(width) for c in row) for row in cells)
    return "\n".join(lines) + "\n"


def gram_table(report: GramReport) -> str:
    parts = [f"sample size {report.sample_size}\n", "empirical (rounded):\n", matrix_table(report.rounded, report.labels)]
    if report.ambiguous:
        parts.append("half-integer entries: " + ", ".join(f"({i},{j})" for i, j in report.ambiguous) + "\n")
    if report.theoretical is not None:
        parts.append(f"M({report.group}):\n")
        parts.append(matrix_table(report.theoretical, report.labels))
        parts.append(norm_table(report))
    if report.cross_block is not None:
        parts.append("cross block:\n")
        parts.append(matrix_table(report.cross_block))
    return "".join(parts)


def identification_table(result: IdentificationResult) -> str:
    lines = [f"{result.polynomial}  ({result.sample_size} primes)"]
    for v in result.verdicts:
        if v.witness is not None:
            detail = f"p={v.witness.prime}: {v.witness.generator} = {fraction_text(v.witness.value)}"
        else:
            detail = f"linf {v.linf:.6f}"
        lines.append(f"  {v.group:<8} {v.status:<11} {detail}")
    for names in result.indistinguishable:
        lines.append("  indistinguishable by cycle data: " + ", ".join(names))
    return "\n".join(lines) + "\n"


def sample_frame(sample: PrimeSample, basis: Optional[TestBasis] = None) -> pd.DataFrame:
    """One row per prime: ``p``, cycle type, s-vector and optional character values."""
    rows = []
    for e in sample.entries:
        row: Dict[str, Any] = {"p": e.prime}
        for src, (ct, pt) in enumerate(zip(e.cycle_types, e.points)):
            suffix = "" if len(e.points) == 1 else f"_{src}"
            row["cycle_type" + suffix] = str(ct)
            row["svector" + suffix] = str(pt)
        if basis is not None:
            for label, value in zip(basis.labels, basis.evaluate(e)):
                row[label] = fraction_text(value)
        if sample.is_exact():
            row["weight"] = e.weight
        rows.append(row)
    return pd.DataFrame(rows)


def convergence_frame(report: GramReport) -> pd.DataFrame:
    return pd.DataFrame(
        [{"batch": n.batch, "size": n.size, "l2": n.l2, "l8": n.l8, "linf": n.linf} for n in report.norms],
        columns=["batch", "size", "l2", "l8", "linf"],
    )


def frame_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, float_format=f"%.{FLOAT_DIGITS}f", lineterminator="\n")


def sample_to_dict(sample: PrimeSample) -> Dict[str, Any]:
    return {
        "polynomials": [str(f) for f in sample.polynomials],
        "skipped": list(sample.skipped),
        "entries": [
            {"p": e.prime, "cycle_types": [list(ct.parts) for ct in e.cycle_types], "svectors": [list(pt.svector) for pt in e.points]}
            for e in sample.entries
        ],
    }


def plot_convergence(report: GramReport, path) -> Path:
    """PNG of the three norms against the sample size, with the 0.5 threshold."""
    if not report.norms:
        raise ValueError("report has no norms to plot")
    frame = convergence_frame(report)
    fig = Figure(figsize=(8, 5), dpi=100)
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(111)
    for column, label in (("l2", "l2"), ("l8", "l8"), ("linf", "l-infinity")):
        ax.plot(frame["size"], frame[column], marker="o", label=label, linewidth=2)
    ax.axhline(0.5, color="gray", linestyle="--", linewidth=1)
    ax.set_xlabel("primes")
    ax.set_ylabel("normalized error")
    ax.set_title(f"{', '.join(report.polynomials) or 'Haar data'} against {report.group}")
    ax.legend(loc="best")
    ax.grid(True, alpha=0.3)
    target = Path(path)
    fig.savefig(target)
    logger.info("wrote convergence plot to %s", target)
    return target
