"""Cartan types, Cartan matrices and Coxeter matrices."""
from dataclasses import dataclass
from math import factorial
from typing import List, Tuple, Union

import numpy as np

from weyl_explorer.coxeter.validation import (
    validate_cartan_type,
    validate_coxeter_matrix,
)
from weyl_explorer.utils.parsing import parse_cartan_string

# a_ij * a_ji -> m(i, j)
BOND_ORDERS = {0: 2, 1: 3, 2: 4, 3: 6}

EXCEPTIONAL_ORDERS = {
    ("E", 6): 51840,
    ("E", 7): 2903040,
    ("E", 8): 696729600,
    ("F", 4): 1152,
    ("G", 2): 12,
}


@dataclass(frozen=True)
class CartanType:
    """Finite crystallographic Cartan type.

    Generators are numbered 1..rank from left to right in the Dynkin
    diagram, following Bourbaki for types B to G.

    Attributes:
        family: Family letter, one of A, B, C, D, E, F, G.
        rank: Number of simple reflections.
    """

    family: str
    rank: int

    def __post_init__(self) -> None:
        """Normalize the family letter and validate the pair."""
        object.__setattr__(self, "family", self.family.upper())
        validate_cartan_type(self.family, self.rank)

    def __str__(self) -> str:  # noqa: D105
        return f"{self.family}{self.rank}"

    def _edges(self) -> List[Tuple[int, int]]:
        n = self.rank
        if self.family == "D":
            return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
        if self.family == "E":
            edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]
            return [(i, j) for i, j in edges if j < n]
        return [(i, i + 1) for i in range(n - 1)]

    @property
    def cartan_matrix(self) -> np.ndarray:
        """Cartan matrix with entries a_ij = <alpha_i^vee, alpha_j>."""
        n = self.rank
        matrix = 2 * np.identity(n, dtype=np.int64)
        for i, j in self._edges():
            matrix[i, j] = matrix[j, i] = -1

        if self.family == "B":
            matrix[n - 1, n - 2] = -2
        elif self.family == "C":
            matrix[n - 2, n - 1] = -2
        elif self.family == "F":
            matrix[2, 1] = -2
        elif self.family == "G":
            matrix[0, 1] = -3
        return matrix

    @property
    def coxeter_matrix(self) -> np.ndarray:
        """Symmetric matrix of bond orders m(i, j)."""
        cartan = self.cartan_matrix
        products = cartan * cartan.T
        matrix = np.vectorize(lambda p: BOND_ORDERS.get(int(p), 1))(products)
        np.fill_diagonal(matrix, 1)
        validate_coxeter_matrix(matrix)
        return matrix

    @property
    def classified_order(self) -> int:
        """Order of the Weyl group from the classification."""
        n = self.rank
        if self.family == "A":
            return factorial(n + 1)
        if self.family in ("B", "C"):
            return 2**n * factorial(n)
        if self.family == "D":
            return 2 ** (n - 1) * factorial(n)
        return EXCEPTIONAL_ORDERS[(self.family, n)]


def parse_cartan_type(value: Union[str, CartanType]) -> CartanType:
    """Create a CartanType from a string such as ``"A3"``.

    Args:
        value: Cartan type string, or an existing CartanType.

    Returns:
        CartanType: The validated type.
    """
    if isinstance(value, CartanType):
        return value
    family, rank = parse_cartan_string(value)
    return CartanType(family, rank)
