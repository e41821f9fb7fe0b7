"""Tests for the exception hierarchy."""
import pytest

from weyl_explorer.utils import errors


@pytest.mark.parametrize(
    "error_class",
    [
        errors.ConfigError,
        errors.CartanValidationError,
        errors.WordParseError,
        errors.MixedGroupError,
        errors.EnumerationCapError,
        errors.BruhatOrderError,
        errors.CodimensionError,
        errors.BasisMismatchError,
        errors.GroupTypeError,
    ],
)
def test_errors_share_base_class(error_class: type) -> None:
    """Test that every error can be caught as WeylExplorerError."""
    assert issubclass(error_class, errors.WeylExplorerError)
    with pytest.raises(errors.WeylExplorerError, match="message"):
        raise error_class("message")
