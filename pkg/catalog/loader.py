# catalog/loader.py
"""Bundled groups, candidate sets, basis presets and example polynomials.

The data lives in ``catalog/data/*.json``. A directory named by
``FROBCHAR_CATALOG_DIR`` is searched first, so a site can ship its own files.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from permcore import PermGroup, group_from_cycles
from polyarith import IntPolynomial, parse_polynomial
from utilities.config import get_catalog_dir

logger = logging.getLogger(__name__)


class CatalogError(KeyError):
    """Raised for unknown group, set, preset or polynomial names."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "catalog lookup failed"


@dataclass(frozen=True)
class GroupEntry:
    name: str
    degree: int
    order: int
    generators: Tuple[str, ...]
    description: str = ""


@dataclass(frozen=True)
class CorpusEntry:
    """Example polynomial with the group it is known to have.

    :param kronecker: discriminant of a quadratic subfield, when one is recorded
    """

    name: str
    polynomial: IntPolynomial
    group: str
    kronecker: Optional[int] = None


def _find_data_file(filename: str) -> Path:
    """First existing candidate location of a catalog file."""
    candidates = []
    override = get_catalog_dir()
    if override:
        candidates.append(Path(override) / filename)
    candidates.append(Path(__file__).resolve().parent / "data" / filename)
    for path in candidates:
        if path.exists():
            return path
    # last candidate for the error message
    return candidates[-1]


def _load(filename: str) -> Dict[str, Any]:
    path = _find_data_file(filename)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CatalogError(f"cannot read catalog file {path}: {exc}") from exc
    logger.debug("loaded catalog file %s", path)
    return data


@lru_cache(maxsize=1)
def _groups_data() -> Dict[str, Any]:
    return _load("groups.json")


@lru_cache(maxsize=1)
def group_entries() -> Dict[str, GroupEntry]:
    out = {}
    for raw in _groups_data().get("groups", []):
        entry = GroupEntry(
            raw["name"], int(raw["degree"]), int(raw["order"]), tuple(raw["generators"]), raw.get("description", "")
        )
        out[entry.name] = entry
    return out


def group_names() -> List[str]:
    return list(group_entries())


@lru_cache(maxsize=None)
def get_group(name: str) -> PermGroup:
    """Close a catalog group from its generators, checking the recorded order.

    :raises CatalogError: for an unknown name or an order mismatch
    """
    entry = group_entries().get(name)
    if entry is None:
        raise CatalogError(f"unknown group {name!r}; known groups: {', '.join(group_names())}")
    G = group_from_cycles(entry.name, entry.degree, list(entry.generators))
    if G.order != entry.order:
        raise CatalogError(f"catalog group {name} closed to order {G.order}, expected {entry.order}")
    return G


def candidate_set(spec: str) -> List[str]:
    """Names from a set name (``"deg4"``) or a comma list (``"T8_10,T8_11"``)."""
    sets = _groups_data().get("candidate_sets", {})
    if spec in sets:
        return list(sets[spec])
    names = [part.strip() for part in spec.split(",") if part.strip()]
    if not names:
        raise CatalogError("empty candidate list")
    known = group_entries()
    unknown = [n for n in names if n not in known]
    if unknown:
        raise CatalogError(f"unknown candidates {unknown}; sets: {sorted(sets)}")
    return names


def candidate_sets() -> Dict[str, List[str]]:
    return {k: list(v) for k, v in _groups_data().get("candidate_sets", {}).items()}


def preset_data(name: str) -> Optional[Dict[str, Any]]:
    """Stored s-polynomial preset, or ``None`` if ``name`` is not a stored preset."""
    return _groups_data().get("presets", {}).get(name)


def stored_preset_names() -> List[str]:
    return list(_groups_data().get("presets", {}))


@lru_cache(maxsize=1)
def polynomial_corpus() -> Tuple[CorpusEntry, ...]:
    raw = _load("polynomials.json").get("polynomials", [])
    return tuple(
        CorpusEntry(r["name"], parse_polynomial(r["polynomial"]), r["group"], r.get("kronecker")) for r in raw
    )


def corpus_entry(name: str) -> CorpusEntry:
    for entry in polynomial_corpus():
        if entry.name == name:
            return entry
    raise CatalogError(f"no corpus polynomial named {name!r}")


def corpus_polynomial(name: str) -> IntPolynomial:
    return corpus_entry(name).polynomial


def list_catalog(with_classes: bool = False) -> Dict[str, Any]:
    """Everything the catalog knows; class counts need every group closed."""
    groups = []
    for e in group_entries().values():
        row = {"name": e.name, "degree": e.degree, "order": e.order, "description": e.description}
        if with_classes:
            row["classes"] = len(get_group(e.name).classes)
        groups.append(row)
    return {
        "groups": groups,
        "candidate_sets": candidate_sets(),
        "presets": stored_preset_names(),
        "polynomials": [
            {"name": c.name, "polynomial": str(c.polynomial), "group": c.group} for c in polynomial_corpus()
        ],
    }


def clear_cache() -> None:
    """Forget loaded files and closed groups, e.g. after changing ``FROBCHAR_CATALOG_DIR``."""
    for fn in (_groups_data, group_entries, get_group, polynomial_corpus):
        fn.cache_clear()
