"""Finite Weyl groups, Bruhat order and parabolic quotients.

Groups are built from a Cartan type (``"A3"``, ``"B2"``, ...) and fully
enumerated through the reflection representation on the root lattice.
"""
from weyl_explorer.coxeter.bruhat import (
    bruhat_covers,
    bruhat_leq,
    interval,
    lower_interval,
)
from weyl_explorer.coxeter.cartan import CartanType, parse_cartan_type
from weyl_explorer.coxeter.group import (
    Element,
    WeylGroup,
    build_group,
    descents,
    inverse,
    length,
    multiply,
)
from weyl_explorer.coxeter.parabolic import (
    ParabolicSubset,
    coset,
    min_coset_rep,
    parabolic_subgroup,
)

__all__ = [
    "CartanType",
    "Element",
    "ParabolicSubset",
    "WeylGroup",
    "bruhat_covers",
    "bruhat_leq",
    "build_group",
    "coset",
    "descents",
    "interval",
    "inverse",
    "length",
    "lower_interval",
    "min_coset_rep",
    "multiply",
    "parabolic_subgroup",
    "parse_cartan_type",
]
