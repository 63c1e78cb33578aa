"""Subcommands of the asymmetry CLI.

Each module exposes `setup_<name>_parser(subparsers)` and
`execute_<name>_command(args) -> int`.
"""

from asymmetry_cli.commands.bench import execute_bench_command, setup_bench_parser
from asymmetry_cli.commands.compute import execute_compute_command, setup_compute_parser
from asymmetry_cli.commands.listing import execute_models_command, setup_models_parser
from asymmetry_cli.commands.mesh import execute_mesh_command, setup_mesh_parser
from asymmetry_cli.commands.sweep import execute_sweep_command, setup_sweep_parser
from asymmetry_cli.commands.verify import execute_verify_command, setup_verify_parser

__all__ = [
    "execute_bench_command",
    "execute_compute_command",
    "execute_mesh_command",
    "execute_models_command",
    "execute_sweep_command",
    "execute_verify_command",
    "setup_bench_parser",
    "setup_compute_parser",
    "setup_mesh_parser",
    "setup_models_parser",
    "setup_sweep_parser",
    "setup_verify_parser",
]
