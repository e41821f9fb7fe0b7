"""One-line permutations and pattern avoidance in type A."""
from itertools import combinations
from typing import Sequence, Tuple

from weyl_explorer.coxeter.group import Element
from weyl_explorer.utils.errors import GroupTypeError

SINGULAR_PATTERNS = ((3, 4, 1, 2), (4, 2, 3, 1))


def _require_type_a(w: Element) -> None:
    if w.group.cartan.family != "A":
        raise GroupTypeError(
            f"Permutations are only available in type A, not "
            f"{w.group.cartan}"
        )


def one_line_permutation(w: Element) -> Tuple[int, ...]:
    """Return the one-line notation of w in the symmetric group.

    s_i acts as the adjacent transposition (i, i+1); the letters of the
    canonical reduced word are applied from left to right, each swapping
    the entries in positions i and i+1.

    Raises:
        GroupTypeError: If w is not in a group of type A.
    """
    _require_type_a(w)
    permutation = list(range(1, w.group.rank + 2))
    for i in w.word:
        permutation[i - 1], permutation[i] = permutation[i], permutation[i - 1]
    return tuple(permutation)


def contains_pattern(
    permutation: Sequence[int], pattern: Sequence[int]
) -> bool:
    """Return whether some subsequence is order-isomorphic to pattern."""
    size = len(pattern)
    for positions in combinations(range(len(permutation)), size):
        values = [permutation[p] for p in positions]
        ranks = tuple(sorted(values).index(v) + 1 for v in values)
        if ranks == tuple(pattern):
            return True
    return False


def pattern_avoidance_smooth_typeA(w: Element) -> bool:
    """Return whether the permutation of w avoids 3412 and 4231.

    In type A this is equivalent to smoothness of X(w).

    Raises:
        GroupTypeError: If w is not in a group of type A.
    """
    permutation = one_line_permutation(w)
    return not any(
        contains_pattern(permutation, pattern) for pattern in SINGULAR_PATTERNS
    )
