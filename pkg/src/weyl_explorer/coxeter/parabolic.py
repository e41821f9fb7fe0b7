"""Standard parabolic subgroups and minimal coset representatives."""
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Union

from weyl_explorer.coxeter.group import Element, WeylGroup
from weyl_explorer.utils.errors import WordParseError
from weyl_explorer.utils.parsing import parse_word


@dataclass(frozen=True)
class ParabolicSubset:
    """Subset J of the simple reflections, generating W_J.

    Attributes:
        indices: 1-based generator indices in J.
    """

    indices: FrozenSet[int] = frozenset()

    def __post_init__(self) -> None:
        """Store the indices as a frozenset of positive integers."""
        indices = frozenset(self.indices)
        invalid = sorted(i for i in indices if not isinstance(i, int) or i < 1)
        if invalid:
            raise WordParseError(f"Invalid generator indices {invalid}")
        object.__setattr__(self, "indices", indices)

    def __contains__(self, generator: int) -> bool:  # noqa: D105
        return generator in self.indices

    def __str__(self) -> str:  # noqa: D105
        return "{" + ", ".join(str(i) for i in sorted(self.indices)) + "}"

    @classmethod
    def from_text(cls, text: str, rank: int) -> "ParabolicSubset":
        """Read a subset written like a word, e.g. ``"1 3"``."""
        return cls(frozenset(parse_word(text, rank)))

    @classmethod
    def full(cls, group: WeylGroup) -> "ParabolicSubset":
        """Return the subset of all generators."""
        return cls(frozenset(range(1, group.rank + 1)))

    def validate_for(self, group: WeylGroup) -> "ParabolicSubset":
        """Check that J only names generators of the group.

        Raises:
            WordParseError: If an index exceeds the rank.
        """
        outside = sorted(i for i in self.indices if i > group.rank)
        if outside:
            raise WordParseError(
                f"Generators {outside} do not exist in {group.cartan}"
            )
        return self


def in_parabolic(w: Element, subset: ParabolicSubset) -> bool:
    """Return whether w lies in the parabolic subgroup W_J."""
    return set(w.word) <= subset.indices


def parabolic_subgroup(
    group: WeylGroup, subset: ParabolicSubset
) -> List[Element]:
    """Return the elements of W_J in canonical order."""
    subset.validate_for(group)
    return [w for w in group if in_parabolic(w, subset)]


def min_coset_rep(
    w: Element, subset: Union[ParabolicSubset, Iterable[int]]
) -> Element:
    """Return the minimal length representative of the left coset w W_J.

    Right descents lying in J are stripped one at a time until none is
    left; the result w' satisfies l(w) = l(w') + l(w'^-1 w).

    Args:
        w: Element.
        subset: Parabolic subset J.

    Returns:
        Element: The unique shortest element of w W_J.
    """
    if not isinstance(subset, ParabolicSubset):
        subset = ParabolicSubset(frozenset(subset))
    subset.validate_for(w.group)

    current = w
    while True:
        stripped = sorted(current.right_descents & subset.indices)
        if not stripped:
            return current
        current = current.right_multiply(stripped[0])


def coset(w: Element, subset: ParabolicSubset) -> List[Element]:
    """Return the left coset w W_J, sorted in canonical order."""
    members = {w * u for u in parabolic_subgroup(w.group, subset)}
    return sorted(members, key=lambda element: element.index)
