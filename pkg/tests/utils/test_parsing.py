"""Tests for parsing Cartan types and words."""
import pytest

from weyl_explorer.utils.errors import CartanValidationError, WordParseError
from weyl_explorer.utils.parsing import (
    format_word,
    parse_cartan_string,
    parse_word,
)


def test_parse_cartan_string() -> None:
    """Test splitting type strings into family and rank."""
    assert parse_cartan_string("A3") == ("A", 3)
    assert parse_cartan_string("g2") == ("G", 2)
    assert parse_cartan_string(" E_8 ") == ("E", 8)
    # Validity of the pair is checked elsewhere
    assert parse_cartan_string("Z9") == ("Z", 9)


@pytest.mark.parametrize("text", ["", "3", "AA3", "A-3", "A3.5", "A 3 1"])
def test_parse_cartan_string_invalid(text: str) -> None:
    """Test rejection of malformed type strings."""
    with pytest.raises(CartanValidationError, match="Cannot read"):
        parse_cartan_string(text)


def test_parse_word() -> None:
    """Test whitespace- and comma-separated words."""
    assert parse_word("1 2 3 2 1", 3) == [1, 2, 3, 2, 1]
    assert parse_word("1,3", 3) == [1, 3]
    assert parse_word(" 2 ,  1 ", 3) == [2, 1]
    assert parse_word("", 3) == []
    assert parse_word("e", 3) == []
    assert parse_word("1 1 1", 1) == [1, 1, 1]


def test_parse_word_invalid() -> None:
    """Test that every bad token is reported."""
    with pytest.raises(WordParseError) as error:
        parse_word("1 x 0 4", 3)
    message = str(error.value)
    assert "'x' is not a generator index" in message
    assert "generator 0 is not in 1..3" in message
    assert "generator 4 is not in 1..3" in message

    with pytest.raises(WordParseError):
        parse_word("-1", 3)


@pytest.mark.parametrize("text", ["²", "1 ²", "³ 1", "½"])
def test_parse_word_non_decimal_digits(text: str) -> None:
    """Test that digit-like symbols are reported, not converted."""
    with pytest.raises(WordParseError, match="is not a generator index"):
        parse_word(text, 3)


def test_format_word() -> None:
    """Test rendering of words."""
    assert format_word(()) == "e"
    assert format_word([]) == "e"
    assert format_word((1, 2, 3, 2, 1)) == "1 2 3 2 1"
