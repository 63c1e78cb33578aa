"""`asymmetry compute`: one model, one γ, JSON out."""

from __future__ import annotations

import argparse
import logging
from typing import Any

from asymmetry_cli.asymmetry import ScalarOperatorError
from asymmetry_cli.commands.common import (
    add_model_arguments,
    add_output_argument,
    gamma_value,
    model_options,
)
from asymmetry_cli.config import ExitCode, err_console
from asymmetry_cli.registry import evaluate_point
from asymmetry_cli.reports import write_json

logger = logging.getLogger(__name__)


def setup_compute_parser(subparsers: Any) -> argparse.ArgumentParser:
    """Setup the compute subcommand parser."""
    parser = subparsers.add_parser(
        "compute",
        help="Asymmetry degree of one model at one gamma",
        description="Compute A(g, H) for a built-in model and print it as JSON",
    )
    add_model_arguments(parser)
    parser.add_argument("--gamma", type=gamma_value, default=1.0, help="Deformation (default: 1)")
    add_output_argument(parser, "Write the JSON here instead of stdout")
    return parser


def _convention(args: argparse.Namespace, params: dict[str, Any]) -> str | None:
    if args.model == "chain":
        return f"{params['pauli']}/{params['bonds']}/{params['boundary']}"
    if args.model == "chain-inf":
        return f"{params['pauli']}/{params['bonds']}"
    return params.get("pauli")


def _degeneracy_hint(args: argparse.Namespace) -> str:
    if args.model == "fock" and args.M == 1:
        return "M = 1 leaves a one-level spectrum, so H' is a multiple of the identity"
    if args.gamma == 0:
        return "q = 1 makes the deformed operator a multiple of the identity"
    return "the operator is a multiple of the identity"


def execute_compute_command(args: argparse.Namespace) -> int:
    """Evaluate the model and emit {model, params, gamma, value, ...} as JSON.

    Returns:
        Exit code: 0, or 3 when the operator is scalar.
    """
    if args.model is None:
        err_console.print("[bold red]Error:[/bold red] compute needs --model")
        return ExitCode.USAGE
    try:
        result = evaluate_point(
            args.model, args.gamma, variant=args.variant, M=args.M, N=args.N, **model_options(args)
        )
    except ScalarOperatorError as e:
        err_console.print(f"[bold red]Error:[/bold red] {_degeneracy_hint(args)}.")
        err_console.print(f"[dim]{e}[/dim]")
        return ExitCode.SCALAR_DEGENERATE

    params = dict(result.params)
    payload = {
        "model": args.model,
        "params": params,
        "gamma": args.gamma,
        "value": result.value,
        "per_generator": dict(result.per_generator),
        "norm_sq_traceless": result.norm_sq_traceless,
        "backend": result.backend,
        "convention": _convention(args, params),
    }
    write_json(payload, args.out)
    logger.debug("compute %s gamma=%g -> %.15g", args.model, args.gamma, result.value)
    return ExitCode.OK


__all__ = ["execute_compute_command", "setup_compute_parser"]
