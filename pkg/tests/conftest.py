"""Shared fixtures for the weyl_explorer test suite."""
from itertools import combinations
from typing import Callable, Dict, FrozenSet

import pytest

from weyl_explorer.coxeter.group import Element, WeylGroup, build_group


@pytest.fixture
def a1() -> WeylGroup:
    """Weyl group of SL_2."""
    return build_group("A1")


@pytest.fixture
def a2() -> WeylGroup:
    """Weyl group of SL_3."""
    return build_group("A2")


@pytest.fixture
def a3() -> WeylGroup:
    """Weyl group of SL_4."""
    return build_group("A3")


@pytest.fixture
def b2() -> WeylGroup:
    """Weyl group of type B2."""
    return build_group("B2")


@pytest.fixture
def b3() -> WeylGroup:
    """Weyl group of type B3."""
    return build_group("B3")


@pytest.fixture
def singular_w(a3: WeylGroup) -> Element:
    """The singular Schubert divisor s1 s2 s3 s2 s1 of SL_4/B."""
    return a3.element_from_word("1 2 3 2 1")


@pytest.fixture
def s1s3(a3: WeylGroup) -> Element:
    """The element indexing the singular locus of X(s1 s2 s3 s2 s1)."""
    return a3.element_from_word("1 3")


def _subword_products(w: Element) -> FrozenSet[Element]:
    """Elements with a reduced word that is a subword of w's word."""
    word = w.word
    found = set()
    for size in range(len(word) + 1):
        for positions in combinations(range(len(word)), size):
            subword = [word[p] for p in positions]
            element = w.group.element_from_word(subword)
            if element.length == size:
                found.add(element)
    return frozenset(found)


@pytest.fixture
def subword_leq() -> Callable[[Element, Element], bool]:
    """Bruhat order decided by the subword property, by brute force."""
    cache: Dict[Element, FrozenSet[Element]] = {}

    def leq(v: Element, w: Element) -> bool:
        if w not in cache:
            cache[w] = _subword_products(w)
        return v in cache[w]

    return leq
