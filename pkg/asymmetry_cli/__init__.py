"""asymmetry-cli - algebraic asymmetry degrees of q-deformed spin models."""

from asymmetry_cli.main import cli_main

__all__ = ["cli_main"]
