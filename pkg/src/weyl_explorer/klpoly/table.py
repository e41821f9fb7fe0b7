"""Kazhdan-Lusztig polynomials by the standard recursion.

Fix the smallest left descent s of w and put u = sw. For x <= w, with
c = 1 if sx < x and c = 0 otherwise,

    P_{x,w} = q^(1-c) P_{sx,u} + q^c P_{x,u}
              - sum over x <= z < u with sz < z of
                mu(z, u) q^((l(w) - l(z)) / 2) P_{x,z}.

Values are memoized per group, keyed by the pair of element indices. The
value stored for a key does not depend on which caller computes it first,
so a table may be shared freely.
"""
import logging
from functools import lru_cache
from typing import Dict, List, Tuple

import pandas as pd

from weyl_explorer.coxeter.bruhat import _leq, lower_interval
from weyl_explorer.coxeter.group import Element, WeylGroup
from weyl_explorer.coxeter.validation import validate_same_group
from weyl_explorer.klpoly.polynomial import Polynomial
from weyl_explorer.utils.errors import BruhatOrderError
from weyl_explorer.utils.parsing import format_word

logger = logging.getLogger(__name__)

ONE = Polynomial.one()
ZERO = Polynomial.zero()


class KLTable:
    """Memoized Kazhdan-Lusztig and inverse Kazhdan-Lusztig polynomials.

    Args:
        group: Parent Weyl group.

    Attributes:
        group (WeylGroup): Parent Weyl group.
    """

    def __init__(self, group: WeylGroup) -> None:  # noqa: D107
        self.group = group
        self._kl: Dict[Tuple[int, int], Polynomial] = {}
        self._inverse: Dict[Tuple[int, int], Polynomial] = {}
        self._mu_support: Dict[int, List[Tuple[int, int]]] = {}

    def __repr__(self) -> str:  # noqa: D105
        return (
            f"KLTable({self.group.cartan}: {len(self._kl)} polynomials, "
            f"{len(self._inverse)} inverse polynomials)"
        )

    def __len__(self) -> int:  # noqa: D105
        return len(self._kl)

    def kl(self, x: int, w: int) -> Polynomial:
        """Return P_{x,w} for element indices x and w."""
        if x == w:
            return ONE
        if not _leq(self.group, x, w):
            return ZERO

        key = (x, w)
        cached = self._kl.get(key)
        if cached is not None:
            return cached

        value = self._recurse(x, w, min(self.group._left_descents[w]))
        self._kl[key] = value
        return value

    def _recurse(self, x: int, w: int, s: int) -> Polynomial:
        group = self.group
        u = group._left[w][s - 1]
        sx = group._left[x][s - 1]
        c = 1 if s in group._left_descents[x] else 0

        value = self.kl(sx, u).shift(1 - c) + self.kl(x, u).shift(c)
        for z, coefficient in self.mu_support(u):
            if s not in group._left_descents[z] or not _leq(group, x, z):
                continue
            power = (group._lengths[w] - group._lengths[z]) // 2
            value -= self.kl(x, z).shift(power) * coefficient
        return value

    def mu(self, x: int, w: int) -> int:
        """Return the coefficient of q^((l(w)-l(x)-1)/2) in P_{x,w}."""
        gap = self.group._lengths[w] - self.group._lengths[x]
        if gap % 2 == 0:
            return 0
        return self.kl(x, w).coefficient((gap - 1) // 2)

    def mu_support(self, w: int) -> List[Tuple[int, int]]:
        """Return the pairs (z, mu(z, w)) with z < w and mu(z, w) != 0."""
        support = self._mu_support.get(w)
        if support is None:
            support = []
            for z in range(w):
                if _leq(self.group, z, w):
                    coefficient = self.mu(z, w)
                    if coefficient:
                        support.append((z, coefficient))
            self._mu_support[w] = support
        return support

    def kl_with_descent(self, x: int, w: int, s: int) -> Polynomial:
        """Compute P_{x,w} with the top step forced through descent s.

        Lower polynomials still come from the memo table; only the last
        step uses ``s``. Any left descent must give the same answer.

        Raises:
            BruhatOrderError: If s is not a left descent of w.
        """
        if s not in self.group._left_descents[w]:
            raise BruhatOrderError(
                f"{s} is not a left descent of [{self.group[w]}]"
            )
        if x == w:
            return ONE
        if not _leq(self.group, x, w):
            return ZERO
        return self._recurse(x, w, s)

    def inverse_kl(self, x: int, y: int) -> Polynomial:
        """Return Q_{x,y}, solving the inversion identity top-down.

        Q_{x,y} = - sum over x < z <= y of (-1)^(l(z)-l(x)) P_{x,z} Q_{z,y}.
        """
        if x == y:
            return ONE
        if not _leq(self.group, x, y):
            return ZERO

        key = (x, y)
        cached = self._inverse.get(key)
        if cached is not None:
            return cached

        group = self.group
        value = ZERO
        for z in range(x + 1, y + 1):
            if not (_leq(group, x, z) and _leq(group, z, y)):
                continue
            term = self.kl(x, z) * self.inverse_kl(z, y)
            if (group._lengths[z] - group._lengths[x]) % 2:
                value += term
            else:
                value -= term

        self._inverse[key] = value
        return value

    def column(self, w: Element) -> pd.DataFrame:
        """Tabulate P_{v,w} for every v <= w.

        Args:
            w: Upper element.

        Returns:
            pd.DataFrame: One row per v in canonical order with columns
            ``v``, ``length``, ``P`` (rendered) and ``P(1)``.
        """
        rows = []
        for v in lower_interval(w):
            polynomial = self.kl(v.index, w.index)
            rows.append(
                {
                    "v": format_word(v.word),
                    "length": v.length,
                    "P": str(polynomial),
                    "P(1)": polynomial.evaluate(1),
                }
            )
        logger.debug("KL column of [%s]: %d rows, %r", w, len(rows), self)
        return pd.DataFrame(rows, columns=["v", "length", "P", "P(1)"])


@lru_cache(maxsize=None)
def kl_table(group: WeylGroup) -> KLTable:
    """Return the shared KL table of a group."""
    return KLTable(group)


def kl(v: Element, w: Element) -> Polynomial:
    """Return the Kazhdan-Lusztig polynomial P_{v,w}.

    P_{w,w} = 1 and P_{v,w} = 0 unless v <= w.

    Raises:
        MixedGroupError: If v and w come from different groups.
    """
    group = validate_same_group(v, w)
    return kl_table(group).kl(v.index, w.index)


def kl_with_descent(v: Element, w: Element, s: int) -> Polynomial:
    """Return P_{v,w} computed through the left descent s of w."""
    group = validate_same_group(v, w)
    return kl_table(group).kl_with_descent(v.index, w.index, s)


def mu(v: Element, w: Element) -> int:
    """Return the mu-coefficient of a pair v < w.

    Raises:
        BruhatOrderError: If v = w or v is not below w.
    """
    group = validate_same_group(v, w)
    if v == w or not _leq(group, v.index, w.index):
        raise BruhatOrderError(
            f"mu is only defined for v < w, got [{v}] and [{w}]"
        )
    return kl_table(group).mu(v.index, w.index)


def inverse_kl(v: Element, w: Element) -> Polynomial:
    """Return the inverse Kazhdan-Lusztig polynomial Q_{v,w}.

    Q is the unique family with Q_{w,w} = 1, Q_{v,w} = 0 unless v <= w and
    sum over x <= z <= y of (-1)^(l(z)-l(x)) P_{x,z} Q_{z,y} = delta_{x,y}.
    """
    group = validate_same_group(v, w)
    return kl_table(group).inverse_kl(v.index, w.index)
