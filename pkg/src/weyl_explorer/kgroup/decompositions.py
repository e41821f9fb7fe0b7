"""Decompositions of simple modules, dual Verma modules and local cohomology.

In positive characteristic the simple module L(w) is the local cohomology
module of X(w) in its codimension, and exactness of the Grothendieck-Cousin
complex gives

    [L(w)] = sum over y <= w of (-1)^(l(w)-l(y)) [M(y)],

which inverts to the multiplicity-free [M(w)] = sum over y <= w of [L(y)].
In characteristic zero the Kazhdan-Lusztig conjecture replaces the signs by
(-1)^(l(w)-l(y)) P_{y,w}(1), and the inverse decomposition is given by the
inverse Kazhdan-Lusztig polynomials at 1.
"""
import logging
from typing import Dict, List

from weyl_explorer.coxeter.bruhat import (
    bruhat_leq,
    interval,
    lower_interval,
)
from weyl_explorer.coxeter.group import Element
from weyl_explorer.kgroup.kgclass import Basis, KGClass, Regime
from weyl_explorer.klpoly.table import inverse_kl, kl
from weyl_explorer.utils.errors import CodimensionError

logger = logging.getLogger(__name__)


def _sign(gap: int) -> int:
    return -1 if gap % 2 else 1


def simple_in_dualverma_charp(w: Element) -> KGClass:
    """Return [L(w)] in the M basis, positive characteristic."""
    return KGClass(
        Basis.M,
        Regime.CHAR_P,
        {y: _sign(w.length - y.length) for y in lower_interval(w)},
    )


def dualverma_in_simple_charp(w: Element) -> KGClass:
    """Return [M(w)] in the L basis, positive characteristic.

    Every y <= w occurs exactly once.
    """
    return KGClass(Basis.L, Regime.CHAR_P, {y: 1 for y in lower_interval(w)})


def simple_in_dualverma_char0(w: Element) -> KGClass:
    """Return [L(w)] in the M basis, characteristic zero."""
    return KGClass(
        Basis.M,
        Regime.CHAR_0,
        {
            v: _sign(w.length - v.length) * kl(v, w).evaluate(1)
            for v in lower_interval(w)
        },
    )


def dualverma_in_simple_char0(w: Element) -> KGClass:
    """Return [M(w)] in the L basis, characteristic zero.

    The coefficient of [L(y)] is Q_{y,w}(1).
    """
    return KGClass(
        Basis.L,
        Regime.CHAR_0,
        {y: inverse_kl(y, w).evaluate(1) for y in lower_interval(w)},
    )


def simple_in_dualverma(w: Element, regime: Regime) -> KGClass:
    """Return [L(w)] in the M basis under the given regime."""
    if regime is Regime.CHAR_P:
        return simple_in_dualverma_charp(w)
    return simple_in_dualverma_char0(w)


def dualverma_in_simple(w: Element, regime: Regime) -> KGClass:
    """Return [M(w)] in the L basis under the given regime."""
    if regime is Regime.CHAR_P:
        return dualverma_in_simple_charp(w)
    return dualverma_in_simple_char0(w)


def convert(kg_class: KGClass, target: Basis) -> KGClass:
    """Rewrite a class in the target basis.

    Args:
        kg_class: Class to rewrite.
        target: Basis of the result.

    Returns:
        KGClass: Equal class in the target basis, same regime.
    """
    if kg_class.basis is target:
        return kg_class

    expand = (
        dualverma_in_simple if target is Basis.L else simple_in_dualverma
    )
    result = KGClass(target, kg_class.regime, {})
    for element, coefficient in kg_class.terms.items():
        result = result + coefficient * expand(element, kg_class.regime)
    return result


def gc_complex_terms(w: Element) -> List[List[Element]]:
    """Return the terms of the Grothendieck-Cousin complex for X(w).

    Degree i holds the y <= w with l(y) = l(w) - i, for i = 0..l(w).
    """
    degrees: List[List[Element]] = [[] for _ in range(w.length + 1)]
    for y in lower_interval(w):
        degrees[w.length - y.length].append(y)
    return degrees


def gc_alternating_class(w: Element) -> KGClass:
    """Return the alternating sum of the complex terms as an M class."""
    terms: Dict[Element, int] = {}
    for degree, elements in enumerate(gc_complex_terms(w)):
        for y in elements:
            terms[y] = _sign(degree)
    return KGClass(Basis.M, Regime.CHAR_P, terms)


def localcoh_class_charp(w: Element) -> KGClass:
    """Return the class of H^c_{X(w)}(O_X) in positive characteristic.

    The local cohomology module in the codimension of X(w) is the simple
    module L(w) itself.
    """
    return KGClass.delta(w, Basis.L, Regime.CHAR_P)


def localcoh_divisor_class_char0(w: Element) -> KGClass:
    """Return [H^1_{X(w)}(O_X)] in the L basis for a Schubert divisor.

    A codimension-one Schubert variety is a local complete intersection, so
    local cohomology only lives in degree 1 and its class is the
    alternating sum of the dual Verma classes below w.

    Raises:
        CodimensionError: If X(w) is not of codimension one.
    """
    codimension = w.group.longest_element.length - w.length
    if codimension != 1:
        raise CodimensionError(
            f"X({w}) has codimension {codimension}; the local cohomology "
            "formula needs a Schubert divisor (codimension 1)"
        )
    alternating = KGClass(
        Basis.M,
        Regime.CHAR_0,
        {v: _sign(w.length - v.length) for v in lower_interval(w)},
    )
    result = convert(alternating, Basis.L)
    logger.debug("Local cohomology of X(%s): %s", w, result)
    return result


def localcoh_class(w: Element, regime: Regime) -> KGClass:
    """Return the local cohomology class of X(w) under a regime."""
    if regime is Regime.CHAR_P:
        return localcoh_class_charp(w)
    return localcoh_divisor_class_char0(w)


def is_localcoh_simple(w: Element, regime: Regime) -> bool:
    """Return whether H^c_{X(w)}(O_X) has a simple class.

    Always true in positive characteristic; in characteristic zero only
    Schubert divisors are supported.
    """
    return len(localcoh_class(w, regime)) == 1


def mobius(x: Element, y: Element) -> int:
    """Return the Moebius function of Bruhat order on [x, y].

    Computed by the poset recursion mu(x, x) = 1 and
    mu(x, y) = - sum over x <= z < y of mu(x, z).

    Raises:
        BruhatOrderError: If x is not below y.
    """
    values: Dict[Element, int] = {}
    for z in interval(x, y):
        if z == x:
            values[z] = 1
        else:
            values[z] = -sum(
                value for u, value in values.items() if bruhat_leq(u, z)
            )
    return values[y]


def verma_identity_check(x: Element, y: Element) -> bool:
    """Check sum over x <= z <= y of (-1)^l(x) (-1)^l(z) = delta_{x,y}.

    Raises:
        BruhatOrderError: If x is not below y.
    """
    total = sum(_sign(x.length + z.length) for z in interval(x, y))
    return total == (1 if x == y else 0)
