"""Basis-change matrices between the M and L bases."""
import numpy as np
import pandas as pd

from weyl_explorer.coxeter.group import WeylGroup
from weyl_explorer.kgroup.decompositions import (
    dualverma_in_simple,
    simple_in_dualverma,
)
from weyl_explorer.kgroup.kgclass import Basis, Regime
from weyl_explorer.utils.parsing import format_word


def transition_matrix(
    group: WeylGroup, regime: Regime, source: Basis
) -> np.ndarray:
    """Return the matrix expressing one basis in the other.

    Rows and columns follow (length, canonical word) order. Column w holds
    the coefficients of the source symbol at w in the other basis, so the
    matrix is upper unitriangular and the matrices for both sources are
    mutually inverse.

    Args:
        group: Weyl group.
        regime: Characteristic regime.
        source: Basis whose symbols are expanded.

    Returns:
        np.ndarray: Square matrix of Python integers (dtype object).
    """
    expand = simple_in_dualverma if source is Basis.L else dualverma_in_simple
    matrix = np.zeros((group.order, group.order), dtype=object)
    for w in group:
        for y, coefficient in expand(w, regime).terms.items():
            matrix[y.index, w.index] = coefficient
    return matrix


def transition_frame(
    group: WeylGroup, regime: Regime, source: Basis
) -> pd.DataFrame:
    """Return `transition_matrix` labelled by canonical words."""
    labels = [format_word(w.word) for w in group]
    return pd.DataFrame(
        transition_matrix(group, regime, source), index=labels, columns=labels
    )
