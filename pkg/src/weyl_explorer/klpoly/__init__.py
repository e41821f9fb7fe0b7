"""Kazhdan-Lusztig polynomials, their inverses and R-polynomials."""
from weyl_explorer.klpoly.polynomial import Polynomial, poincare_polynomial
from weyl_explorer.klpoly.rpoly import kl_oracle, r_polynomial
from weyl_explorer.klpoly.table import (
    KLTable,
    inverse_kl,
    kl,
    kl_table,
    kl_with_descent,
    mu,
)

__all__ = [
    "KLTable",
    "Polynomial",
    "inverse_kl",
    "kl",
    "kl_oracle",
    "kl_table",
    "kl_with_descent",
    "mu",
    "poincare_polynomial",
    "r_polynomial",
]
