"""Bundled groups, candidate sets, basis presets and example polynomials."""

from .loader import (
    CatalogError,
    CorpusEntry,
    GroupEntry,
    candidate_set,
    candidate_sets,
    clear_cache,
    corpus_entry,
    corpus_polynomial,
    get_group,
    group_entries,
    group_names,
    list_catalog,
    polynomial_corpus,
    preset_data,
    stored_preset_names,
)

__all__ = [
    "CatalogError",
    "CorpusEntry",
    "GroupEntry",
    "candidate_set",
    "candidate_sets",
    "clear_cache",
    "corpus_entry",
    "corpus_polynomial",
    "get_group",
    "group_entries",
    "group_names",
    "list_catalog",
    "polynomial_corpus",
    "preset_data",
    "stored_preset_names",
]
