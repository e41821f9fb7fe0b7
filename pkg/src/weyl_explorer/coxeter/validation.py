"""Validation utilities for Cartan data and group membership."""

from typing import TYPE_CHECKING, Dict, FrozenSet

import numpy as np

from weyl_explorer.utils.errors import (
    CartanValidationError,
    MixedGroupError,
)

if TYPE_CHECKING:
    from weyl_explorer.coxeter.group import Element, WeylGroup

MINIMAL_RANKS: Dict[str, int] = {
    "A": 1,
    "B": 2,
    "C": 2,
    "D": 4,
    "E": 6,
    "F": 4,
    "G": 2,
}

FIXED_RANKS: Dict[str, FrozenSet[int]] = {
    "E": frozenset({6, 7, 8}),
    "F": frozenset({4}),
    "G": frozenset({2}),
}

NON_CRYSTALLOGRAPHIC = {"H", "I"}

VALID_BOND_ORDERS = {2, 3, 4, 6}


def valid_families_message() -> str:
    """Describe the accepted finite types."""
    return (
        "valid families are A_n (n>=1), B_n and C_n (n>=2), D_n (n>=4), "
        "E6, E7, E8, F4 and G2"
    )


def validate_cartan_type(family: str, rank: int) -> bool:
    """Check that (family, rank) names a finite crystallographic type.

    Args:
        family: Upper-case family letter.
        rank: Number of simple reflections.

    Returns:
        bool: True if validation passes.

    Raises:
        CartanValidationError: If the pair is not a finite Weyl group type.
    """
    errors = []
    if family in NON_CRYSTALLOGRAPHIC:
        errors.append(
            f"Type {family} is not crystallographic and has no Weyl group"
        )
    elif family not in MINIMAL_RANKS:
        errors.append(f"Unknown family '{family}'")
    elif not isinstance(rank, int) or rank < MINIMAL_RANKS[family]:
        errors.append(
            f"Rank {rank} is too small for family {family} "
            f"(minimum {MINIMAL_RANKS[family]})"
        )
    elif family in FIXED_RANKS and rank not in FIXED_RANKS[family]:
        errors.append(
            f"Family {family} only exists in ranks "
            f"{sorted(FIXED_RANKS[family])}"
        )

    if errors:
        raise CartanValidationError(
            f"Invalid Cartan type {family}{rank}: "
            + "; ".join(errors)
            + f"; {valid_families_message()}"
        )
    return True


def validate_coxeter_matrix(matrix: np.ndarray) -> bool:
    """Check the defining properties of a finite Weyl group Coxeter matrix.

    Args:
        matrix: Square integer matrix of bond orders m(i, j).

    Returns:
        bool: True if validation passes.

    Raises:
        CartanValidationError: If the matrix is not symmetric, has a
            diagonal entry other than 1, or an off-diagonal entry outside
            {2, 3, 4, 6}.
    """
    errors = []
    if not np.array_equal(matrix, matrix.T):
        errors.append("matrix is not symmetric")
    if not np.all(np.diag(matrix) == 1):
        errors.append("diagonal entries must be 1")

    off_diagonal = matrix[~np.eye(len(matrix), dtype=bool)]
    invalid = set(off_diagonal.tolist()) - VALID_BOND_ORDERS
    if invalid:
        errors.append(f"bond orders {sorted(invalid)} are not allowed")

    if errors:
        message = "Invalid Coxeter matrix\n" + "\n".join(
            f"{i + 1}. {error}" for i, error in enumerate(errors)
        )
        raise CartanValidationError(message)
    return True


def validate_same_group(*elements: "Element") -> "WeylGroup":
    """Check that all elements belong to one Weyl group.

    Args:
        *elements: Elements to compare.

    Returns:
        WeylGroup: The common parent group.

    Raises:
        MixedGroupError: If two elements come from different groups.
    """
    group = elements[0].group
    for element in elements[1:]:
        if element.group is not group:
            raise MixedGroupError(
                f"Cannot combine elements of {group.cartan} and "
                f"{element.group.cartan}"
            )
    return group
