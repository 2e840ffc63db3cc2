"""Spanner edge sets, exact dilation, and privacy constraint sets."""

from spanner.constraints import (
    ConstraintSet,
    dump_constraints,
    exact_constraints,
    exact_row_count,
    reduced_constraints,
    reduced_row_count,
)
from spanner.dilation import DilationResult, ImplicationReport, dilation, implication_certificate
from spanner.edges import EdgeSet, all_pairs_edges, build_edges

__all__ = [
    "ConstraintSet",
    "DilationResult",
    "EdgeSet",
    "ImplicationReport",
    "all_pairs_edges",
    "build_edges",
    "dilation",
    "dump_constraints",
    "exact_constraints",
    "exact_row_count",
    "implication_certificate",
    "reduced_constraints",
    "reduced_row_count",
]
