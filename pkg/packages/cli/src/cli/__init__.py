"""Command-line front end for building and checking geo-indistinguishable mechanisms."""

from cli.app import ExitCode, build_parser, main

__all__ = ["ExitCode", "build_parser", "main"]
