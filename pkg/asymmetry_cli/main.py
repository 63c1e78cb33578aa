"""Main entry point for the asymmetry CLI."""

import argparse
import logging
import sys

from asymmetry_cli._version import __version__
from asymmetry_cli.asymmetry import ScalarOperatorError
from asymmetry_cli.commands import (
    execute_bench_command,
    execute_compute_command,
    execute_mesh_command,
    execute_models_command,
    execute_sweep_command,
    execute_verify_command,
    setup_bench_parser,
    setup_compute_parser,
    setup_mesh_parser,
    setup_models_parser,
    setup_sweep_parser,
    setup_verify_parser,
)
from asymmetry_cli.config import ExitCode, console, err_console, setup_logging
from asymmetry_cli.ui import show_help

logger = logging.getLogger(__name__)

COMMANDS = {
    "compute": execute_compute_command,
    "sweep": execute_sweep_command,
    "verify": execute_verify_command,
    "mesh": execute_mesh_command,
    "bench": execute_bench_command,
    "models": execute_models_command,
}


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command line arguments."""
    parser = argparse.ArgumentParser(
        prog="asymmetry",
        description="Asymmetry degrees of q-deformed operators against su(2) generators",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        add_help=False,
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"asymmetry {__version__}",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Debug logging on stderr",
    )

    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    # Help command
    subparsers.add_parser("help", help="Show help information")

    setup_compute_parser(subparsers)
    setup_sweep_parser(subparsers)
    setup_verify_parser(subparsers)
    setup_mesh_parser(subparsers)
    setup_bench_parser(subparsers)
    setup_models_parser(subparsers)
    return parser.parse_args(argv)


def run(args: argparse.Namespace) -> int:
    """Dispatch to a subcommand and map domain errors to exit codes."""
    if args.command in (None, "help"):
        show_help()
        return ExitCode.OK
    try:
        return COMMANDS[args.command](args)
    except ScalarOperatorError as e:
        err_console.print(f"[bold red]Error:[/bold red] {e}")
        return ExitCode.SCALAR_DEGENERATE
    except OSError as e:
        err_console.print(f"[bold red]Error:[/bold red] {e}")
        return ExitCode.IO
    except (ValueError, OverflowError) as e:
        err_console.print(f"[bold red]Error:[/bold red] {e}")
        return ExitCode.USAGE


def cli_main(argv: list[str] | None = None) -> None:
    """Entry point for console script."""
    try:
        args = parse_args(argv)
        setup_logging(logging.DEBUG if args.verbose else None)
        code = run(args)
    except KeyboardInterrupt:
        # Clean exit on Ctrl+C - suppress ugly traceback
        console.print("\n\n[yellow]Interrupted[/yellow]")
        sys.exit(0)
    logger.debug("%s finished with exit code %d", args.command, code)
    sys.exit(int(code))


if __name__ == "__main__":
    cli_main()
