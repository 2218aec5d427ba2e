from .truth_table import (
    PartialAssignment,
    TruthTable,
    evaluate,
    iter_bits,
    mask_of,
    partial_assignments,
    popcount,
    restrict,
    restrict_variable,
)
from .multilinear import (
    MultilinearPoly,
    degree,
    is_boolean_poly,
    is_junta,
    mobius,
    poly_evaluate,
    relevant_count,
    relevant_vars,
    sensitive_vars,
    unmobius,
)
from .codec import format_table, parse_table, read_table

__all__ = [
    "MultilinearPoly",
    "PartialAssignment",
    "TruthTable",
    "degree",
    "evaluate",
    "format_table",
    "is_boolean_poly",
    "is_junta",
    "iter_bits",
    "mask_of",
    "mobius",
    "parse_table",
    "partial_assignments",
    "poly_evaluate",
    "popcount",
    "read_table",
    "relevant_count",
    "relevant_vars",
    "restrict",
    "restrict_variable",
    "sensitive_vars",
    "unmobius",
]
