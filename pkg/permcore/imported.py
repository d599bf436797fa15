# permcore/imported.py
"""Class data for groups too large to enumerate.

The JSON layout is::

    {"name": "...", "degree": n, "order": N,
     "classes": [{"cycle_type": [...], "size": m, "svector": [...]}, ...],
     "rational_characters": [[...], ...]}          # optional

An :class:`ImportedGroup` exposes the same ``degree``/``order``/
``class_sizes``/``cycle_types`` surface as :class:`permcore.group.PermGroup`,
which is all the s-polynomial side of the pipeline needs.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from polyarith import CycleType

logger = logging.getLogger(__name__)


class ClassDataError(ValueError):
    """Raised when imported class data violates the schema or its own consistency checks."""


@dataclass(frozen=True)
class ImportedClass:
    cycle_type: CycleType
    size: int
    svector: Tuple[int, ...]


@dataclass(frozen=True)
class ImportedGroup:
    """Externally supplied class data.

    :param rational_characters: optional integer rows over the classes
    """

    name: str
    degree: int
    order: int
    classes: Tuple[ImportedClass, ...]
    rational_characters: Optional[Tuple[Tuple[int, ...], ...]] = field(default=None)

    @property
    def class_sizes(self) -> Tuple[int, ...]:
        return tuple(c.size for c in self.classes)

    @property
    def cycle_types(self) -> Tuple[CycleType, ...]:
        return tuple(c.cycle_type for c in self.classes)

    def rational_gram(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """Haar-weighted Gram matrix of the supplied rational rows."""
        rows = self.rational_characters or ()
        weights = [Fraction(s, self.order) for s in self.class_sizes]
        return tuple(
            tuple(sum((w * a * b for w, a, b in zip(weights, u, v)), Fraction(0)) for v in rows)
            for u in rows
        )


def _require(data: Dict[str, Any], key: str, kind: type) -> Any:
    if key not in data:
        raise ClassDataError(f"missing field {key!r}")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ClassDataError(f"field {key!r} must be {kind.__name__}")
    return value


def imported_group_from_dict(data: Dict[str, Any]) -> ImportedGroup:
    """Validate and build an :class:`ImportedGroup`.

    Checks: sizes sum to the order, every svector matches its cycle type,
    and supplied rational rows are pairwise orthogonal with positive integer norms.
    """
    # local import: charparam depends on permcore
    from charparam.classpoint import s_vector

    name = _require(data, "name", str)
    degree = _require(data, "degree", int)
    order = _require(data, "order", int)
    raw_classes = _require(data, "classes", list)

    classes = []
    for i, entry in enumerate(raw_classes):
        if not isinstance(entry, dict):
            raise ClassDataError(f"class {i} must be an object")
        ct = CycleType.of(_require(entry, "cycle_type", list))
        if ct.degree != degree:
            raise ClassDataError(f"class {i}: cycle type {ct} is not a partition of {degree}")
        size = _require(entry, "size", int)
        expected = s_vector(ct).svector
        svector = tuple(entry.get("svector", expected))
        if svector != expected:
            raise ClassDataError(f"class {i}: svector {list(svector)} does not match cycle type {ct}")
        classes.append(ImportedClass(ct, size, svector))

    if sum(c.size for c in classes) != order:
        raise ClassDataError(f"class sizes sum to {sum(c.size for c in classes)}, expected {order}")

    rows = data.get("rational_characters")
    rational = None
    if rows is not None:
        if any(len(r) != len(classes) for r in rows):
            raise ClassDataError("every rational character row needs one value per class")
        rational = tuple(tuple(int(v) for v in r) for r in rows)

    group = ImportedGroup(name, degree, order, tuple(classes), rational)
    if rational:
        gram = group.rational_gram()
        for i, row in enumerate(gram):
            for j, value in enumerate(row):
                if i != j and value != 0:
                    raise ClassDataError(f"rational rows {i} and {j} are not orthogonal ({value})")
            if row[i].denominator != 1 or row[i] < 1:
                raise ClassDataError(f"rational row {i} has norm {row[i]}, expected a positive integer")
    logger.info("imported class data for %s: %d classes, order %d", name, len(classes), order)
    return group


def load_imported_group(path) -> ImportedGroup:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ClassDataError(f"cannot read class data from {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ClassDataError("class data must be a JSON object")
    return imported_group_from_dict(data)
