"""Brute-force character-table oracle for GL_1(F_q) and GL_2(F_q)."""

from .cyclotomic import CycloElement, cyclotomic_poly
from .tables import (
    SUPPORTED_Q,
    Character,
    CharacterTable,
    ConjClass,
    InsufficientQError,
    MixedTablesError,
    UnsupportedQError,
    all_generic_tuples,
    build_table,
    build_table_gl1,
    build_table_gl2,
    find_generic_tuple,
    inner_product,
    is_generic_tuple,
    minimal_q,
    oracle_multiplicity,
    oracle_vs_formula,
)

__all__ = [
    "Character",
    "CharacterTable",
    "ConjClass",
    "CycloElement",
    "InsufficientQError",
    "MixedTablesError",
    "SUPPORTED_Q",
    "UnsupportedQError",
    "all_generic_tuples",
    "build_table",
    "build_table_gl1",
    "build_table_gl2",
    "cyclotomic_poly",
    "find_generic_tuple",
    "inner_product",
    "is_generic_tuple",
    "minimal_q",
    "oracle_multiplicity",
    "oracle_vs_formula",
]
