"""Exact character tables: cyclotomic values, Dixon-style computation, rational tables, JSON I/O."""

from .cyclotomic import CyclotomicError, CyclotomicNumber, format_cyclotomic, parse_cyclotomic
from .dixon import character_table, choose_prime
from .table import (
    CharacterTable,
    CharacterTableError,
    RationalCharacterTable,
    column_orthogonality,
    decompose,
    galois_orbits,
    inner_product,
    rational_character_table,
    verify_orthogonality,
    verify_rational_table,
)
from .tableio import TableImportError, export_table, import_table, table_from_dict, table_to_dict

__all__ = [
    "CharacterTable",
    "CharacterTableError",
    "CyclotomicError",
    "CyclotomicNumber",
    "RationalCharacterTable",
    "TableImportError",
    "character_table",
    "choose_prime",
    "column_orthogonality",
    "decompose",
    "export_table",
    "format_cyclotomic",
    "galois_orbits",
    "import_table",
    "inner_product",
    "parse_cyclotomic",
    "rational_character_table",
    "table_from_dict",
    "table_to_dict",
    "verify_orthogonality",
    "verify_rational_table",
]
