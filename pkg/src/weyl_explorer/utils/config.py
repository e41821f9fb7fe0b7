"""Runtime configuration for weyl_explorer."""
import os
from typing import Optional
from warnings import warn

from weyl_explorer.utils.errors import ConfigError

DEFAULT_ENUMERATION_CAP = 10**7
ENUMERATION_CAP_ENV = "WEYL_EXPLORER_MAX_ORDER"


def enumeration_cap(allow_large: bool = False) -> Optional[int]:
    """Return the largest group order that may be enumerated.

    The default cap can be replaced through the ``WEYL_EXPLORER_MAX_ORDER``
    environment variable.

    Args:
        allow_large: If True, no cap applies.

    Returns:
        The cap, or None when enumeration is unrestricted.

    Raises:
        ConfigError: If the environment variable is not a positive integer.
    """
    if allow_large:
        warn("Enumeration cap disabled", stacklevel=2)
        return None

    value = os.environ.get(ENUMERATION_CAP_ENV)
    if value is None or not value.strip():
        return DEFAULT_ENUMERATION_CAP

    value = value.strip()
    if not value.isdecimal() or int(value) == 0:
        raise ConfigError(
            f"{ENUMERATION_CAP_ENV} must be a positive integer, "
            f"got '{value}'"
        )
    return int(value)
