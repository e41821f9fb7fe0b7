"""Configuration of a command-line invocation."""
from dataclasses import dataclass

from weyl_explorer.coxeter.cartan import CartanType, parse_cartan_type
from weyl_explorer.coxeter.group import WeylGroup, build_group
from weyl_explorer.kgroup.kgclass import Regime
from weyl_explorer.utils.errors import ConfigError

FORMATS = ("text", "json", "markdown")


@dataclass
class CliConfig:
    """Options shared by every subcommand.

    Attributes:
        group: Cartan type string such as ``"A3"``.
        format: Output format, one of text, json or markdown.
        char: Characteristic, ``"0"``, ``"p"`` or a prime.
        allow_large: Disable the enumeration cap.
        verbosity: Number of ``-v`` flags given.
    """

    group: str = "A3"
    format: str = "text"
    char: str = "0"
    allow_large: bool = False
    verbosity: int = 0

    def __post_init__(self) -> None:
        """Validate the group string, format and characteristic."""
        if self.format not in FORMATS:
            raise ConfigError(
                f"Unknown format '{self.format}', expected one of "
                f"{', '.join(FORMATS)}"
            )
        self.cartan: CartanType = parse_cartan_type(self.group)
        self.regime: Regime = Regime.from_characteristic(self.char)

    def build(self) -> WeylGroup:
        """Build the configured Weyl group."""
        return build_group(self.cartan, allow_large=self.allow_large)
