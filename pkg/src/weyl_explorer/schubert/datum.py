"""Dimension, codimension and rational smoothness of Schubert varieties."""
from dataclasses import dataclass
from typing import FrozenSet, List
from warnings import warn

import pandas as pd

from weyl_explorer.coxeter.bruhat import bruhat_leq, lower_interval
from weyl_explorer.coxeter.group import Element, WeylGroup
from weyl_explorer.klpoly.table import kl
from weyl_explorer.schubert.patterns import (
    one_line_permutation,
    pattern_avoidance_smooth_typeA,
)
from weyl_explorer.utils.parsing import format_word


@dataclass(frozen=True)
class SchubertDatum:
    """Geometric bookkeeping for the Schubert variety X(w).

    Attributes:
        w: Element indexing the Schubert variety.
        dim: Dimension, equal to l(w).
        codim: Codimension in the flag variety, l(w0) - l(w).
        rationally_smooth: True if P_{v,w} = 1 for every v <= w.
        singular_locus_maximals: Bruhat-maximal v <= w with P_{v,w} != 1.
    """

    w: Element
    dim: int
    codim: int
    rationally_smooth: bool
    singular_locus_maximals: FrozenSet[Element]

    def __post_init__(self) -> None:
        """Check the relations between the fields."""
        if self.dim + self.codim != self.w.group.longest_element.length:
            raise ValueError("dim + codim must equal the length of w0")
        if self.rationally_smooth != (not self.singular_locus_maximals):
            raise ValueError(
                "X(w) is rationally smooth iff its singular locus is empty"
            )

    @property
    def sorted_singular_locus(self) -> List[Element]:
        """Singular locus maximals in canonical order."""
        return sorted(self.singular_locus_maximals, key=lambda v: v.index)


def _rationally_singular(w: Element) -> List[Element]:
    return [v for v in lower_interval(w) if not kl(v, w).is_one()]


def rationally_smooth(w: Element) -> bool:
    """Return whether P_{v,w} = 1 for every v <= w."""
    return not _rationally_singular(w)


def singular_locus_maximals(w: Element) -> FrozenSet[Element]:
    """Return the maximal elements of {v <= w : P_{v,w} != 1}.

    These index the components of the rationally singular locus of X(w).
    """
    singular = _rationally_singular(w)
    return frozenset(
        v
        for v in singular
        if not any(u != v and bruhat_leq(v, u) for u in singular)
    )


def schubert_datum(w: Element) -> SchubertDatum:
    """Collect dimension, codimension and smoothness data of X(w)."""
    maximals = singular_locus_maximals(w)
    return SchubertDatum(
        w=w,
        dim=w.length,
        codim=w.group.longest_element.length - w.length,
        rationally_smooth=not maximals,
        singular_locus_maximals=maximals,
    )


def codimension_one(group: WeylGroup) -> List[Element]:
    """Return the elements indexing Schubert divisors."""
    return group.elements_of_length(group.longest_element.length - 1)


def schubert_scan(group: WeylGroup) -> pd.DataFrame:
    """Tabulate Schubert data for every element of a group.

    For groups of type A the one-line permutation and the pattern-avoidance
    verdict are added; elsewhere only rational smoothness is available.

    Args:
        group: Weyl group to scan.

    Returns:
        pd.DataFrame: One row per element, in canonical order.
    """
    type_a = group.cartan.family == "A"
    if not type_a:
        warn(
            f"{group.cartan} is not of type A: smoothness is reported as "
            "rational smoothness only",
            stacklevel=2,
        )

    rows = []
    for w in group:
        datum = schubert_datum(w)
        row = {
            "w": format_word(w.word),
            "dim": datum.dim,
            "codim": datum.codim,
            "rationally_smooth": datum.rationally_smooth,
            "singular_locus": ", ".join(
                f"[{format_word(v.word)}]" for v in datum.sorted_singular_locus
            ),
        }
        if type_a:
            row["permutation"] = " ".join(
                str(i) for i in one_line_permutation(w)
            )
            row["smooth"] = pattern_avoidance_smooth_typeA(w)
        rows.append(row)
    return pd.DataFrame(rows)
