"""Tests for the enumeration cap configuration."""
import pytest

from weyl_explorer.utils.config import (
    DEFAULT_ENUMERATION_CAP,
    ENUMERATION_CAP_ENV,
    enumeration_cap,
)
from weyl_explorer.utils.errors import ConfigError


def test_default_cap(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test the default cap."""
    monkeypatch.delenv(ENUMERATION_CAP_ENV, raising=False)
    assert enumeration_cap() == DEFAULT_ENUMERATION_CAP == 10**7
    monkeypatch.setenv(ENUMERATION_CAP_ENV, "  ")
    assert enumeration_cap() == DEFAULT_ENUMERATION_CAP


def test_cap_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test overriding the cap through the environment."""
    monkeypatch.setenv(ENUMERATION_CAP_ENV, "500")
    assert enumeration_cap() == 500


@pytest.mark.parametrize("value", ["0", "-5", "1e6", "many", "²", "1²"])
def test_invalid_cap(monkeypatch: pytest.MonkeyPatch, value: str) -> None:
    """Test rejection of invalid environment values."""
    monkeypatch.setenv(ENUMERATION_CAP_ENV, value)
    with pytest.raises(ConfigError, match=ENUMERATION_CAP_ENV):
        enumeration_cap()


def test_cap_disabled(monkeypatch: pytest.MonkeyPatch) -> None:
    """Test that allow_large removes the cap with a warning."""
    monkeypatch.setenv(ENUMERATION_CAP_ENV, "many")
    with pytest.warns(UserWarning, match="disabled"):
        assert enumeration_cap(allow_large=True) is None
