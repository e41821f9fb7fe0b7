"""Tests for parabolic subgroups and minimal coset representatives."""
from itertools import combinations

import pytest

from weyl_explorer.coxeter.group import WeylGroup
from weyl_explorer.coxeter.parabolic import (
    ParabolicSubset,
    coset,
    in_parabolic,
    min_coset_rep,
    parabolic_subgroup,
)
from weyl_explorer.utils.errors import WordParseError


def _all_subsets(group: WeylGroup) -> list:
    generators = range(1, group.rank + 1)
    return [
        ParabolicSubset(frozenset(indices))
        for size in range(group.rank + 1)
        for indices in combinations(generators, size)
    ]


def test_parabolic_subset() -> None:
    """Test construction and rendering of subsets."""
    subset = ParabolicSubset.from_text("3 1", 3)
    assert subset.indices == {1, 3}
    assert 1 in subset
    assert 2 not in subset
    assert str(subset) == "{1, 3}"
    assert str(ParabolicSubset()) == "{}"


def test_parabolic_subset_invalid(a3: WeylGroup) -> None:
    """Test rejection of generators outside the group."""
    with pytest.raises(WordParseError):
        ParabolicSubset(frozenset({0}))
    with pytest.raises(WordParseError, match="do not exist in A3"):
        ParabolicSubset(frozenset({4})).validate_for(a3)
    with pytest.raises(WordParseError):
        ParabolicSubset.from_text("5", 3)


def test_min_coset_rep_examples(a3: WeylGroup) -> None:
    """Test minimal coset representatives of small cosets."""
    subset = ParabolicSubset(frozenset({2}))
    for candidate in _all_subsets(a3):
        assert min_coset_rep(a3.identity, candidate) == a3.identity
    assert min_coset_rep(a3.element_from_word("1 2"), subset) == (
        a3.generator(1)
    )
    assert min_coset_rep(a3.element_from_word("1 2"), [2]) == (
        a3.generator(1)
    )
    assert (
        min_coset_rep(a3.longest_element, ParabolicSubset.full(a3))
        == a3.identity
    )


def test_min_coset_rep_properties(a3: WeylGroup) -> None:
    """Test the defining properties over every coset of A3."""
    for subset in _all_subsets(a3):
        members = parabolic_subgroup(a3, subset)
        for w in a3:
            rep = min_coset_rep(w, subset)
            assert not rep.right_descents & subset.indices
            assert in_parabolic(rep.inverse() * w, subset)
            assert w.length == rep.length + (rep.inverse() * w).length
            assert min_coset_rep(rep, subset) == rep
            for u in members:
                assert min_coset_rep(w * u, subset) == rep


def test_parabolic_subgroup_and_coset(a3: WeylGroup) -> None:
    """Test sizes of parabolic subgroups and their cosets."""
    subset = ParabolicSubset(frozenset({1, 3}))
    members = parabolic_subgroup(a3, subset)
    assert members == [
        a3.identity,
        a3.generator(1),
        a3.generator(3),
        a3.element_from_word("1 3"),
    ]
    assert len(parabolic_subgroup(a3, ParabolicSubset(frozenset({1, 2})))) == 6

    w = a3.element_from_word("1 2")
    members = coset(w, ParabolicSubset(frozenset({2})))
    assert members == [a3.generator(1), w]
    assert len(coset(w, subset)) == 4
