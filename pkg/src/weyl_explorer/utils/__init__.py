"""Utility functions for weyl_explorer.

This module contains parsing helpers, configuration and the exception
hierarchy shared by every subpackage.
"""
from weyl_explorer.utils.parsing import (
    format_word,
    parse_cartan_string,
    parse_word,
)

__all__ = ["format_word", "parse_cartan_string", "parse_word"]
