"""R-polynomials and a second, independent route to KL polynomials.

The KL polynomials are the unique family with P_{w,w} = 1, degree of
P_{x,w} at most (l(w) - l(x) - 1) / 2 for x < w, and

    q^(l(w)-l(x)) P_{x,w}(1/q) = sum over x <= z <= w of R_{x,z} P_{z,w}.

Moving P_{x,w} to the left, the low half of the left-hand side is -P_{x,w}
and the high half is the reflected polynomial, so P_{x,w} is minus the
truncation of sum over x < z <= w of R_{x,z} P_{z,w}. Solving the interval
[e, w] from the top down gives every P_{x,w} without the mu recursion.
"""
import logging
from functools import lru_cache
from typing import Dict, Tuple

from weyl_explorer.coxeter.bruhat import _leq
from weyl_explorer.coxeter.group import Element, WeylGroup
from weyl_explorer.coxeter.validation import validate_same_group
from weyl_explorer.klpoly.polynomial import Polynomial

logger = logging.getLogger(__name__)

ONE = Polynomial.one()
ZERO = Polynomial.zero()
Q_MINUS_ONE = Polynomial((-1, 1))
Q = Polynomial((0, 1))


class RPolynomialOracle:
    """R-polynomials and the triangular solve for KL polynomials.

    Args:
        group: Parent Weyl group.
    """

    def __init__(self, group: WeylGroup) -> None:  # noqa: D107
        self.group = group
        self._r: Dict[Tuple[int, int], Polynomial] = {}
        self._columns: Dict[int, Dict[int, Polynomial]] = {}

    def r(self, x: int, w: int) -> Polynomial:
        """Return R_{x,w} by recursion on the smallest left descent of w."""
        if x == w:
            return ONE
        if not _leq(self.group, x, w):
            return ZERO

        key = (x, w)
        cached = self._r.get(key)
        if cached is not None:
            return cached

        group = self.group
        s = min(group._left_descents[w])
        sw = group._left[w][s - 1]
        sx = group._left[x][s - 1]
        if s in group._left_descents[x]:
            value = self.r(sx, sw)
        else:
            value = Q_MINUS_ONE * self.r(x, sw) + Q * self.r(sx, sw)

        self._r[key] = value
        return value

    def kl_column(self, w: int) -> Dict[int, Polynomial]:
        """Solve for P_{x,w} for every x <= w."""
        cached = self._columns.get(w)
        if cached is not None:
            return cached

        group = self.group
        below = [x for x in range(w + 1) if _leq(group, x, w)]
        column: Dict[int, Polynomial] = {w: ONE}
        for x in reversed(below[:-1]):
            total = ZERO
            for z in below:
                if z > x and _leq(group, x, z):
                    total += self.r(x, z) * column[z]
            bound = (group._lengths[w] - group._lengths[x] - 1) // 2
            column[x] = -total.truncate(bound)

        logger.debug(
            "Solved KL column of [%s] from %d R-polynomials",
            group[w],
            len(self._r),
        )
        self._columns[w] = column
        return column

    def kl(self, x: int, w: int) -> Polynomial:
        """Return P_{x,w} from the triangular solve."""
        return self.kl_column(w).get(x, ZERO)


@lru_cache(maxsize=None)
def r_oracle(group: WeylGroup) -> RPolynomialOracle:
    """Return the shared R-polynomial oracle of a group."""
    return RPolynomialOracle(group)


def r_polynomial(v: Element, w: Element) -> Polynomial:
    """Return the R-polynomial R_{v,w}.

    Raises:
        MixedGroupError: If v and w come from different groups.
    """
    group = validate_same_group(v, w)
    return r_oracle(group).r(v.index, w.index)


def kl_oracle(v: Element, w: Element) -> Polynomial:
    """Return P_{v,w} computed from R-polynomials alone."""
    group = validate_same_group(v, w)
    return r_oracle(group).kl(v.index, w.index)
