"""Bruhat order on a finite Weyl group."""
from typing import List

from weyl_explorer.coxeter.group import Element, WeylGroup
from weyl_explorer.coxeter.validation import validate_same_group
from weyl_explorer.utils.errors import BruhatOrderError


def _leq(group: WeylGroup, v: int, w: int) -> bool:
    """Decide v <= w by the lifting property.

    With s the smallest left descent of w: if s is also a left descent of
    v then v <= w iff sv <= sw, otherwise v <= w iff v <= sw.
    """
    if v == 0 or v == w:
        return True
    if group._lengths[v] >= group._lengths[w]:
        return False

    key = (v, w)
    cached = group._bruhat_memo.get(key)
    if cached is not None:
        return cached

    s = min(group._left_descents[w])
    shorter = group._left[w][s - 1]
    if s in group._left_descents[v]:
        result = _leq(group, group._left[v][s - 1], shorter)
    else:
        result = _leq(group, v, shorter)

    group._bruhat_memo[key] = result
    return result


def bruhat_leq(v: Element, w: Element) -> bool:
    """Return whether v <= w in Bruhat order.

    Args:
        v: Lower candidate.
        w: Upper candidate.

    Returns:
        bool: True if the Schubert variety of v lies in that of w.

    Raises:
        MixedGroupError: If v and w come from different groups.
    """
    group = validate_same_group(v, w)
    return _leq(group, v.index, w.index)


def interval(v: Element, w: Element) -> List[Element]:
    """Return the Bruhat interval [v, w].

    Args:
        v: Lower end.
        w: Upper end.

    Returns:
        List of every z with v <= z <= w, sorted by length and then by
        canonical word.

    Raises:
        BruhatOrderError: If v is not below w.
    """
    group = validate_same_group(v, w)
    if not _leq(group, v.index, w.index):
        raise BruhatOrderError(f"[{v}] is not below [{w}] in Bruhat order")

    return [
        Element(group, z)
        for z in range(v.index, w.index + 1)
        if v.length <= group._lengths[z] <= w.length
        and _leq(group, v.index, z)
        and _leq(group, z, w.index)
    ]


def lower_interval(w: Element) -> List[Element]:
    """Return every element below w, i.e. the interval [e, w]."""
    return interval(w.group.identity, w)


def bruhat_covers(w: Element) -> List[Element]:
    """Return the elements covered by w in Bruhat order."""
    return [
        z
        for z in w.group.elements_of_length(w.length - 1)
        if _leq(w.group, z.index, w.index)
    ]
