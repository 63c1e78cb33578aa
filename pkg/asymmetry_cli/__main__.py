"""Allow running the CLI as: python -m asymmetry_cli."""

from asymmetry_cli.main import cli_main

if __name__ == "__main__":
    cli_main()
