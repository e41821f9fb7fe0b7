"""Command-line front end."""
from weyl_explorer.cli.main import build_parser, main

__all__ = ["build_parser", "main"]
