"""`asymmetry bench`: timing of the tensor backend on long chains."""

from __future__ import annotations

import argparse
import logging
import time
from typing import Any

from rich.table import Table

from asymmetry_cli.asymmetry import asymmetry
from asymmetry_cli.commands.common import finite_float, gamma_value, positive_int
from asymmetry_cli.config import COLORS, ExitCode, console
from asymmetry_cli.models import BOND_CONVENTIONS, BOUNDARY_CONVENTIONS
from asymmetry_cli.operators import PAULI_CONVENTIONS
from asymmetry_cli.registry import build_model

logger = logging.getLogger(__name__)

DEFAULT_SIZES = (10, 50, 100, 200)
CROSS_CHECK_SITES = 10
TIMED_SITES = 100
TIME_LIMIT_SECONDS = 10.0


def _sizes(raw: str) -> tuple[int, ...]:
    return tuple(positive_int(item.strip()) for item in raw.split(",") if item.strip())


def setup_bench_parser(subparsers: Any) -> argparse.ArgumentParser:
    """Setup the bench subcommand parser."""
    parser = subparsers.add_parser(
        "bench",
        help="Time the tensor backend on long chains",
        description="Time the tensor-backend chain asymmetry and cross-check it against dense",
    )
    parser.add_argument(
        "--sizes",
        type=_sizes,
        default=DEFAULT_SIZES,
        help="Comma-separated chain lengths (default: 10,50,100,200)",
    )
    parser.add_argument("--gamma", type=gamma_value, default=1.0, help="Deformation (default: 1)")
    parser.add_argument("--pauli", choices=PAULI_CONVENTIONS, default="full")
    parser.add_argument("--bonds", choices=BOND_CONVENTIONS, default="open")
    parser.add_argument("--boundary", choices=BOUNDARY_CONVENTIONS, default="mirrored")
    parser.add_argument(
        "--tol",
        type=finite_float,
        default=1e-10,
        help="Relative tolerance of the dense cross-check (default: 1e-10)",
    )
    parser.add_argument(
        "--time-limit",
        type=finite_float,
        default=TIME_LIMIT_SECONDS,
        help=f"Seconds allowed for N={TIMED_SITES} (default: {TIME_LIMIT_SECONDS:g})",
    )
    return parser


def _chain_options(n_sites: int, args: argparse.Namespace) -> dict[str, Any]:
    return {"N": n_sites, "pauli": args.pauli, "bonds": args.bonds, "boundary": args.boundary}


def _time_tensor(n_sites: int, args: argparse.Namespace) -> tuple[float, float, int]:
    start = time.perf_counter()
    built = build_model("chain", args.gamma, backend="tensor", **_chain_options(n_sites, args))
    value = asymmetry(built.generators, built.hamiltonian).total
    elapsed = time.perf_counter() - start
    return value, elapsed, built.hamiltonian.n_terms  # type: ignore[union-attr]


def execute_bench_command(args: argparse.Namespace) -> int:
    """Print a timing table and check the dense agreement and the N=100 time limit.

    Returns:
        0 when both checks pass, 5 otherwise.
    """
    table = Table(
        title=f"Tensor-backend chain asymmetry at gamma={args.gamma:g}",
        show_header=True,
        header_style=f"bold {COLORS['primary']}",
    )
    table.add_column("N", justify="right", style="bold")
    table.add_column("H terms", justify="right")
    table.add_column("A", justify="right")
    table.add_column("Seconds", justify="right")

    ok = True
    for n in sorted(set(args.sizes)):
        value, elapsed, n_terms = _time_tensor(n, args)
        table.add_row(str(n), str(n_terms), f"{value:.12g}", f"{elapsed:.3f}")
        logger.debug("bench N=%d: %.3fs", n, elapsed)
        if n == TIMED_SITES and elapsed > args.time_limit:
            console.print(
                f"[bold red]N={n} took {elapsed:.2f}s, "
                f"over the {args.time_limit:g}s limit[/bold red]"
            )
            ok = False

    tensor_value, _, _ = _time_tensor(CROSS_CHECK_SITES, args)
    dense = build_model(
        "chain", args.gamma, backend="dense", **_chain_options(CROSS_CHECK_SITES, args)
    )
    dense_value = asymmetry(dense.generators, dense.hamiltonian).total
    deviation = abs(tensor_value - dense_value) / max(abs(dense_value), 1.0)
    agrees = deviation <= args.tol
    ok = ok and agrees

    console.print()
    console.print(table)
    color = COLORS["pass"] if agrees else COLORS["fail"]
    console.print(
        f"N={CROSS_CHECK_SITES} tensor vs dense: relative difference {deviation:.2e}",
        style=color,
    )
    return ExitCode.OK if ok else ExitCode.VERIFY_FAILED


__all__ = ["execute_bench_command", "setup_bench_parser"]
