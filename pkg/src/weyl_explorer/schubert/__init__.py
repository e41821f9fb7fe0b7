"""Schubert varieties: dimensions, smoothness and singular loci."""
from weyl_explorer.schubert.datum import (
    SchubertDatum,
    codimension_one,
    rationally_smooth,
    schubert_datum,
    schubert_scan,
    singular_locus_maximals,
)
from weyl_explorer.schubert.patterns import (
    contains_pattern,
    one_line_permutation,
    pattern_avoidance_smooth_typeA,
)

__all__ = [
    "SchubertDatum",
    "codimension_one",
    "contains_pattern",
    "one_line_permutation",
    "pattern_avoidance_smooth_typeA",
    "rationally_smooth",
    "schubert_datum",
    "schubert_scan",
    "singular_locus_maximals",
]
