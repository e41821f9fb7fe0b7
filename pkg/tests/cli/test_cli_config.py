"""Tests for the command-line configuration."""
import pytest

from weyl_explorer.cli.config import CliConfig
from weyl_explorer.coxeter.cartan import CartanType
from weyl_explorer.kgroup.kgclass import Regime
from weyl_explorer.utils.errors import CartanValidationError, ConfigError


def test_cli_config_defaults() -> None:
    """Test the default configuration."""
    config = CliConfig()
    assert config.cartan == CartanType("A", 3)
    assert config.regime is Regime.CHAR_0
    assert config.build().order == 24


def test_cli_config_values() -> None:
    """Test explicit values."""
    config = CliConfig(group="b_2", format="markdown", char="3")
    assert config.cartan == CartanType("B", 2)
    assert config.regime is Regime.CHAR_P
    assert config.build().order == 8


def test_cli_config_invalid() -> None:
    """Test that invalid values are rejected."""
    with pytest.raises(ConfigError, match="Unknown format 'yaml'"):
        CliConfig(format="yaml")
    with pytest.raises(CartanValidationError):
        CliConfig(group="D2")
    with pytest.raises(ConfigError):
        CliConfig(char="6")
