"""Command-line dispatch."""

from .dispatch import CommandArgumentParser, build_parser, dispatch

__all__ = ["CommandArgumentParser", "build_parser", "dispatch"]
