"""
.. include:: ../../README.md
"""  # noqa: D200, D415, D212
from weyl_explorer.coxeter import (
    CartanType,
    Element,
    ParabolicSubset,
    WeylGroup,
    build_group,
    parse_cartan_type,
)
from weyl_explorer.klpoly import Polynomial, inverse_kl, kl, mu
from weyl_explorer.kgroup import Basis, KGClass, Regime

__all__ = [
    "Basis",
    "CartanType",
    "Element",
    "KGClass",
    "ParabolicSubset",
    "Polynomial",
    "Regime",
    "WeylGroup",
    "build_group",
    "inverse_kl",
    "kl",
    "mu",
    "parse_cartan_type",
]
