"""Utility functions for parsing Cartan types and words."""
import re
from typing import List, Tuple

from weyl_explorer.utils.errors import CartanValidationError, WordParseError

CARTAN_PATTERN = re.compile(r"^\s*([A-Za-z])\s*_?\s*(\d+)\s*$")
WORD_SEPARATOR = re.compile(r"[\s,]+")


def parse_cartan_string(text: str) -> Tuple[str, int]:
    """Split a Cartan type string such as ``"A3"`` into family and rank.

    The family letter is case-insensitive and an optional underscore may
    separate it from the rank (``"b_2"`` is read as ``("B", 2)``). Whether
    the pair is a valid finite type is decided later by
    `weyl_explorer.coxeter.validation`.

    Args:
        text: Cartan type string.

    Returns:
        Tuple of the upper-case family letter and the rank.

    Raises:
        CartanValidationError: If the string is not a letter followed by
            a rank.
    """
    match = CARTAN_PATTERN.match(text)
    if not match:
        raise CartanValidationError(
            f"Cannot read Cartan type '{text}': expected a family letter "
            "followed by a rank, e.g. 'A3', 'B2' or 'G2'"
        )
    return match.group(1).upper(), int(match.group(2))


def parse_word(text: str, rank: int) -> List[int]:
    """Parse whitespace- or comma-separated 1-based generator indices.

    Args:
        text: Word such as ``"1 2 3 2 1"`` or ``"1,3"``. The empty string
            (or ``"e"``) denotes the identity.
        rank: Number of generators; every index must lie in ``1..rank``.

    Returns:
        List of 1-based generator indices, in the order given.

    Raises:
        WordParseError: If a token is not an integer or is out of range.
    """
    stripped = text.strip()
    if stripped in ("", "e"):
        return []

    errors = []
    word = []
    for token in WORD_SEPARATOR.split(stripped):
        if not token:
            continue
        if not token.isdecimal():
            errors.append(f"'{token}' is not a generator index")
            continue
        index = int(token)
        if not 1 <= index <= rank:
            errors.append(f"generator {index} is not in 1..{rank}")
            continue
        word.append(index)

    if errors:
        raise WordParseError(
            f"Invalid word '{text}': " + "; ".join(errors)
        )
    return word


def format_word(word: Tuple[int, ...] | List[int]) -> str:
    """Render a word of generator indices, ``"e"`` for the empty word."""
    if not word:
        return "e"
    return " ".join(str(index) for index in word)
