"""Simplicial homology and graded Betti numbers."""

from .betti import (
    BettiTable,
    betti_table,
    euler_mismatches,
    field_discrepancies,
    generator_degree_mismatches,
    has_linear_resolution,
    hilbert_numerator,
    is_componentwise_linear,
    regularity,
)
from .simplicial import HomologyProfile, clear_homology_cache, reduced_homology_dims

__all__ = [
    "BettiTable",
    "HomologyProfile",
    "betti_table",
    "clear_homology_cache",
    "euler_mismatches",
    "field_discrepancies",
    "generator_degree_mismatches",
    "has_linear_resolution",
    "hilbert_numerator",
    "is_componentwise_linear",
    "reduced_homology_dims",
    "regularity",
]
