"""Exceptions raised by weyl_explorer."""


class WeylExplorerError(Exception):
    """Base class of every error raised by weyl_explorer."""


class ConfigError(WeylExplorerError):
    """Exception raised for invalid configuration values."""


class CartanValidationError(WeylExplorerError):
    """Exception raised for invalid Cartan types."""


class WordParseError(WeylExplorerError):
    """Exception raised when a word of generator indices cannot be read."""


class MixedGroupError(WeylExplorerError):
    """Exception raised when operands belong to different Weyl groups."""


class EnumerationCapError(WeylExplorerError):
    """Exception raised when a group is too large to enumerate."""


class BruhatOrderError(WeylExplorerError):
    """Exception raised when a pair violates a Bruhat order precondition."""


class CodimensionError(WeylExplorerError):
    """Exception raised when a Schubert variety has the wrong codimension."""


class BasisMismatchError(WeylExplorerError):
    """Exception raised when Grothendieck classes cannot be combined."""


class GroupTypeError(WeylExplorerError):
    """Exception raised for operations restricted to another Cartan type."""
