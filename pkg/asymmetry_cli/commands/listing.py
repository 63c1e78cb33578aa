"""`asymmetry models`: list the built-in models."""

from __future__ import annotations

import argparse
from typing import Any

from asymmetry_cli.config import ExitCode, console
from asymmetry_cli.ui import models_table


def setup_models_parser(subparsers: Any) -> argparse.ArgumentParser:
    """Setup the models subcommand parser."""
    return subparsers.add_parser(
        "models",
        help="List built-in models",
        description="List the built-in models, their size parameter and description",
    )


def execute_models_command(args: argparse.Namespace) -> int:  # noqa: ARG001
    """Print the model table."""
    console.print()
    console.print(models_table())
    return ExitCode.OK


__all__ = ["execute_models_command", "setup_models_parser"]
