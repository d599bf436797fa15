# chartab/tableio.py
"""JSON import/export of character tables.

Irreducible tables::

    {"group": "D4", "h": 5, "exponent": 4, "order": 8,
     "classes": [{"cycle_type": [1,1,1,1], "size": 1}, ...],
     "characters": [["1", "1", ...], ["2", "-2", "0", ...]]}

Rational tables set ``"rational": true`` and carry plain integers in
``"characters"`` plus optional ``"orbit_sizes"`` (defaults to the norms).
"""

from __future__ import annotations

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Union

from polyarith import CycleType

from .cyclotomic import CyclotomicError, format_cyclotomic, parse_cyclotomic
from .table import (
    CharacterTable,
    CharacterTableError,
    RationalCharacterTable,
    inner_product,
    verify_rational_table,
)

logger = logging.getLogger(__name__)

AnyTable = Union[CharacterTable, RationalCharacterTable]


class TableImportError(ValueError):
    """Raised for schema violations or tables that fail orthogonality.

    :param deviation: largest ``|A D A^dagger - I|`` entry when orthogonality fails
    """

    def __init__(self, message: str, deviation: Fraction | None = None):
        super().__init__(message)
        self.deviation = deviation


def table_to_dict(T: AnyTable) -> Dict[str, Any]:
    classes = [{"cycle_type": list(ct.parts), "size": s} for ct, s in zip(T.cycle_types, T.class_sizes)]
    if isinstance(T, RationalCharacterTable):
        return {
            "group": T.name,
            "rational": True,
            "h": len(T.class_sizes),
            "order": T.order,
            "classes": classes,
            "characters": [list(r) for r in T.rows],
            "orbit_sizes": list(T.orbit_sizes),
        }
    return {
        "group": T.name,
        "h": T.h,
        "exponent": T.exponent,
        "order": T.order,
        "classes": classes,
        "characters": [[format_cyclotomic(v) for v in row] for row in T.characters],
    }


def export_table(T: AnyTable, path) -> Path:
    target = Path(path)
    target.write_text(json.dumps(table_to_dict(T), indent=2) + "\n", encoding="utf-8")
    logger.info("wrote character table of %s to %s", T.name, target)
    return target


def _field(data: Dict[str, Any], key: str):
    if key not in data:
        raise TableImportError(f"missing field {key!r}")
    return data[key]


def table_from_dict(data: Dict[str, Any]) -> AnyTable:
    """Build and verify a table; never returns one that fails orthogonality."""
    name = str(_field(data, "group"))
    classes = _field(data, "classes")
    if not isinstance(classes, list) or not classes:
        raise TableImportError("'classes' must be a non-empty list")
    try:
        cycle_types = tuple(CycleType.of(c["cycle_type"]) for c in classes)
        sizes = tuple(int(c["size"]) for c in classes)
    except (KeyError, TypeError, ValueError) as exc:
        raise TableImportError(f"malformed class entry: {exc}") from exc
    order = int(data.get("order", sum(sizes)))
    if sum(sizes) != order:
        raise TableImportError(f"class sizes sum to {sum(sizes)}, not the order {order}")
    h = int(data.get("h", len(classes)))
    if h != len(classes):
        raise TableImportError(f"h={h} but {len(classes)} classes listed")
    chars = _field(data, "characters")
    if not isinstance(chars, list) or any(not isinstance(r, list) or len(r) != h for r in chars):
        raise TableImportError("every character row needs exactly one value per class")

    if data.get("rational"):
        try:
            rows = tuple(tuple(int(v) for v in r) for r in chars)
        except (TypeError, ValueError) as exc:
            raise TableImportError("rational tables must hold integers") from exc
        provisional = RationalCharacterTable(name, order, sizes, cycle_types, rows, tuple(1 for _ in rows))
        gram = provisional.gram()
        orbit_sizes = tuple(int(s) for s in data.get("orbit_sizes", [gram[i][i] for i in range(len(rows))]))
        table = RationalCharacterTable(name, order, sizes, cycle_types, rows, orbit_sizes)
        ok, worst = verify_rational_table(table)
        if not ok:
            raise TableImportError(f"rational table of {name} fails orthogonality (max deviation {worst})", worst)
        return table

    if len(chars) != h:
        raise TableImportError(f"an irreducible table needs {h} characters, got {len(chars)}")
    exponent = int(_field(data, "exponent"))
    try:
        values = tuple(tuple(parse_cyclotomic(v, exponent) for v in r) for r in chars)
    except CyclotomicError as exc:
        raise TableImportError(str(exc)) from exc
    table = CharacterTable(name, order, exponent, sizes, cycle_types, values)
    worst = Fraction(0)
    for i, u in enumerate(values):
        for j, v in enumerate(values):
            diff = inner_product(table, u, v) - (1 if i == j else 0)
            worst = max([worst] + [abs(c) for _, c in diff.terms])
    if worst:
        raise TableImportError(f"character table of {name} fails orthogonality (max deviation {worst})", worst)
    return table


def import_table(path) -> AnyTable:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise TableImportError(f"cannot read table from {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise TableImportError("table file must hold a JSON object")
    table = table_from_dict(data)
    logger.info("imported verified table of %s", table.name)
    return table


__all__ = [
    "AnyTable",
    "CharacterTableError",
    "TableImportError",
    "export_table",
    "import_table",
    "table_from_dict",
    "table_to_dict",
]
