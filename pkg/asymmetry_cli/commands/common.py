"""Argument helpers shared by the subcommands."""

from __future__ import annotations

import argparse
import math
from pathlib import Path
from typing import Any

from asymmetry_cli.closed_forms import VARIANTS
from asymmetry_cli.models import BOND_CONVENTIONS, BOUNDARY_CONVENTIONS, DeformationParam
from asymmetry_cli.operators import PAULI_CONVENTIONS
from asymmetry_cli.registry import MODELS


def positive_int(raw: str) -> int:
    """argparse type for integers >= 1."""
    try:
        value = int(raw)
    except ValueError:
        msg = f"expected an integer, got {raw!r}"
        raise argparse.ArgumentTypeError(msg) from None
    if value < 1:
        msg = f"expected a positive integer, got {value}"
        raise argparse.ArgumentTypeError(msg)
    return value


def finite_float(raw: str) -> float:
    """argparse type for finite floats."""
    try:
        value = float(raw)
    except ValueError:
        msg = f"expected a number, got {raw!r}"
        raise argparse.ArgumentTypeError(msg) from None
    if not math.isfinite(value):
        msg = f"expected a finite number, got {raw!r}"
        raise argparse.ArgumentTypeError(msg)
    return value


def gamma_value(raw: str) -> float:
    """argparse type for γ; applies the DeformationParam range check."""
    value = finite_float(raw)
    try:
        DeformationParam(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None
    return value


def size_list(raw: str) -> list[float]:
    """Comma-separated sizes such as `3,50,inf`; `inf` parses to `math.inf`."""
    values: list[float] = []
    for item in raw.split(","):
        token = item.strip().lower()
        if not token:
            continue
        if token in {"inf", "infinity"}:
            values.append(math.inf)
            continue
        values.append(positive_int(token))
    if not values:
        msg = f"expected at least one size, got {raw!r}"
        raise argparse.ArgumentTypeError(msg)
    return values


def add_model_arguments(parser: argparse.ArgumentParser, *, size_lists: bool = False) -> None:
    """--model, --M, --N and the chain convention flags."""
    parser.add_argument("--model", choices=tuple(MODELS), help="Model to evaluate")
    size_type = size_list if size_lists else positive_int
    suffix = " (comma-separated, inf allowed)" if size_lists else ""
    parser.add_argument("--M", type=size_type, help=f"Fock excitation number{suffix}")
    parser.add_argument("--N", type=size_type, help=f"Chain length{suffix}")
    parser.add_argument(
        "--backend",
        choices=("dense", "tensor", "auto"),
        default="auto",
        help="Operator backend (default: auto, dense up to ASYM_AUTO_DENSE_LIMIT)",
    )
    parser.add_argument(
        "--pauli",
        choices=PAULI_CONVENTIONS,
        default=None,
        help="Pauli normalization (default: half for casimir, full for chain)",
    )
    parser.add_argument(
        "--bonds", choices=BOND_CONVENTIONS, default="open", help="Chain bonds (default: open)"
    )
    parser.add_argument(
        "--boundary",
        choices=BOUNDARY_CONVENTIONS,
        default="mirrored",
        help="Sign of the chain boundary term (default: mirrored)",
    )
    parser.add_argument(
        "--variant",
        choices=VARIANTS,
        default="corrected",
        help="Closed-form variant for chain-inf (default: corrected)",
    )


def add_output_argument(parser: argparse.ArgumentParser, help_text: str) -> None:
    """--out FILE; stdout when omitted."""
    parser.add_argument("--out", type=Path, default=None, help=help_text)


def model_options(args: argparse.Namespace) -> dict[str, Any]:
    """Keyword arguments for `build_model` from parsed flags.

    Only options that apply to the chosen model are included.
    """
    options: dict[str, Any] = {"pauli": args.pauli}
    if args.model in {"chain", "chain-inf"}:
        options["bonds"] = args.bonds
    if args.model == "chain":
        options["boundary"] = args.boundary
        options["backend"] = args.backend
    elif args.model in {"fock", "casimir"}:
        options["backend"] = "dense" if args.backend == "auto" else args.backend
    return options
