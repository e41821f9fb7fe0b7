"""Grothendieck group bookkeeping for dual Verma and simple modules."""
from weyl_explorer.kgroup.decompositions import (
    convert,
    dualverma_in_simple,
    dualverma_in_simple_char0,
    dualverma_in_simple_charp,
    gc_alternating_class,
    gc_complex_terms,
    is_localcoh_simple,
    localcoh_class,
    localcoh_class_charp,
    localcoh_divisor_class_char0,
    mobius,
    simple_in_dualverma,
    simple_in_dualverma_char0,
    simple_in_dualverma_charp,
    verma_identity_check,
)
from weyl_explorer.kgroup.kgclass import Basis, KGClass, Regime
from weyl_explorer.kgroup.matrices import transition_frame, transition_matrix

__all__ = [
    "Basis",
    "KGClass",
    "Regime",
    "convert",
    "dualverma_in_simple",
    "dualverma_in_simple_char0",
    "dualverma_in_simple_charp",
    "gc_alternating_class",
    "gc_complex_terms",
    "is_localcoh_simple",
    "localcoh_class",
    "localcoh_class_charp",
    "localcoh_divisor_class_char0",
    "mobius",
    "simple_in_dualverma",
    "simple_in_dualverma_char0",
    "simple_in_dualverma_charp",
    "transition_frame",
    "transition_matrix",
    "verma_identity_check",
]
