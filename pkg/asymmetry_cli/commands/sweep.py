"""`asymmetry sweep`: asymmetry over a γ grid for one or more model sizes.

A job comes from flags or from a YAML file such as

    model: chain
    N: [3, 50, inf]
    gamma: {min: -3, max: 3, steps: 121}
    pauli: full
    bonds: open
"""

from __future__ import annotations

import argparse
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any

import numpy as np
import yaml

from asymmetry_cli.asymmetry import ScalarOperatorError
from asymmetry_cli.closed_forms import normalize_variant
from asymmetry_cli.commands.common import (
    add_model_arguments,
    add_output_argument,
    gamma_value,
    positive_int,
    size_list,
)
from asymmetry_cli.config import ExitCode, err_console, settings
from asymmetry_cli.models import DeformationParam
from asymmetry_cli.registry import DEFAULT_PAULI, check_model, choose_backend, evaluate_point
from asymmetry_cli.reports import SweepRow, write_json, write_sweep_csv

logger = logging.getLogger(__name__)

DEFAULT_GAMMA_RANGE = (-3.0, 3.0)
DEFAULT_STEPS = 61
SIZE_KEYS = {"fock": "M", "chain": "N"}


def gamma_grid(gamma_min: float, gamma_max: float, steps: int) -> tuple[float, ...]:
    """Inclusive, evenly spaced grid over [gamma_min, gamma_max].

    Raises:
        ValueError: If steps < 2, gamma_min >= gamma_max or a bound is outside the
            DeformationParam range.
    """
    if steps < 2:
        msg = f"steps must be >= 2, got {steps}"
        raise ValueError(msg)
    DeformationParam(gamma_min)
    DeformationParam(gamma_max)
    if gamma_max <= gamma_min:
        msg = f"gamma-max ({gamma_max}) must be above gamma-min ({gamma_min})"
        raise ValueError(msg)
    return tuple(np.linspace(gamma_min, gamma_max, steps).tolist())


def _format_size(size: float | None) -> str:
    if size is None:
        return ""
    return "inf" if math.isinf(size) else str(int(size))


@dataclass(frozen=True)
class SweepJob:
    """Everything needed to evaluate a sweep, independent of how it was specified."""

    model: str
    gammas: tuple[float, ...]
    sizes: tuple[float, ...] = ()
    backend: str = "auto"
    pauli: str | None = None
    bonds: str = "open"
    boundary: str = "mirrored"
    variant: str = "corrected"
    threads: int = 1

    def __post_init__(self) -> None:
        check_model(self.model)
        normalize_variant(self.variant)
        key = SIZE_KEYS.get(self.model)
        if key and not self.sizes:
            msg = f"A {self.model} sweep needs --{key}"
            raise ValueError(msg)
        if self.model == "fock" and any(math.isinf(s) for s in self.sizes):
            msg = "The fock model has no infinite-M form"
            raise ValueError(msg)
        if self.threads < 1:
            msg = f"threads must be >= 1, got {self.threads}"
            raise ValueError(msg)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> SweepJob:
        """Build a job from parsed flags."""
        if args.model is None:
            msg = "sweep needs --model or --job"
            raise ValueError(msg)
        key = SIZE_KEYS.get(args.model)
        sizes = tuple(getattr(args, key) or ()) if key else ()
        return cls(
            model=args.model,
            gammas=gamma_grid(args.gamma_min, args.gamma_max, args.steps),
            sizes=sizes,
            backend=args.backend,
            pauli=args.pauli,
            bonds=args.bonds,
            boundary=args.boundary,
            variant=args.variant,
            threads=args.threads or settings.threads,
        )

    @classmethod
    def from_yaml(cls, path: Path) -> SweepJob:
        """Load a job file.

        Raises:
            OSError: If the file cannot be read.
            ValueError: If the YAML is malformed or misses required keys.
        """
        try:
            data = yaml.safe_load(path.read_text(encoding="utf-8"))
        except yaml.YAMLError as e:
            msg = f"Invalid YAML in {path}: {e}"
            raise ValueError(msg) from e
        if not isinstance(data, dict) or "model" not in data:
            msg = f"Job file {path} must be a mapping with at least a 'model' key"
            raise ValueError(msg)

        model = str(data["model"])
        raw_sizes = data.get(SIZE_KEYS.get(model, ""), ())
        if not isinstance(raw_sizes, list):
            raw_sizes = [raw_sizes]
        sizes = tuple(size for item in raw_sizes for size in size_list(str(item)))
        grid = data.get("gamma", {})
        if not isinstance(grid, dict):
            msg = f"'gamma' in {path} must be a mapping with min, max and steps"
            raise ValueError(msg)
        return cls(
            model=model,
            gammas=gamma_grid(
                float(grid.get("min", DEFAULT_GAMMA_RANGE[0])),
                float(grid.get("max", DEFAULT_GAMMA_RANGE[1])),
                int(grid.get("steps", DEFAULT_STEPS)),
            ),
            sizes=sizes,
            backend=str(data.get("backend", "auto")),
            pauli=data.get("pauli"),
            bonds=str(data.get("bonds", "open")),
            boundary=str(data.get("boundary", "mirrored")),
            variant=str(data.get("variant", "corrected")),
            threads=int(data.get("threads", settings.threads)),
        )

    def points(self) -> list[tuple[float | None, float]]:
        """(size, γ) pairs ordered by size, then γ."""
        sizes: tuple[float | None, ...] = self.sizes or (None,)
        return [(size, gamma) for size in sizes for gamma in self.gammas]

    def _target(self, size: float | None) -> tuple[str, dict[str, Any]]:
        options: dict[str, Any] = {"pauli": self.pauli}
        if self.model == "fock":
            return "fock", {**options, "M": int(size), "backend": "dense"}  # type: ignore[arg-type]
        if self.model == "casimir":
            return "casimir", {**options, "backend": "dense"}
        if self.model == "chain-inf" or (size is not None and math.isinf(size)):
            return "chain-inf", {**options, "bonds": self.bonds}
        return "chain", {
            **options,
            "N": int(size),  # type: ignore[arg-type]
            "bonds": self.bonds,
            "boundary": self.boundary,
            "backend": self.backend,
        }

    def evaluate(self, size: float | None, gamma: float) -> SweepRow:
        """One grid point; a scalar-degenerate point yields a nan row."""
        target, options = self._target(size)
        try:
            result = evaluate_point(target, gamma, variant=self.variant, **options)
            value, backend = result.value, result.backend
        except ScalarOperatorError:
            value, backend = math.nan, self._backend_label(target, size)
        return SweepRow(self.model, _format_size(size), gamma, value, backend)

    def _backend_label(self, target: str, size: float | None) -> str:
        if target == "chain":
            return choose_backend(int(size), self.backend)  # type: ignore[arg-type]
        return "closed-form" if target == "chain-inf" else "dense"

    def run(self) -> list[SweepRow]:
        """Evaluate every point; results keep the input order for any thread count."""
        points = self.points()
        logger.debug("sweep %s: %d points on %d threads", self.model, len(points), self.threads)
        if self.threads == 1:
            return [self.evaluate(size, gamma) for size, gamma in points]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(lambda point: self.evaluate(*point), points))


def setup_sweep_parser(subparsers: Any) -> argparse.ArgumentParser:
    """Setup the sweep subcommand parser."""
    parser = subparsers.add_parser(
        "sweep",
        help="Asymmetry over a gamma grid",
        description="Evaluate a model over an inclusive gamma grid and write CSV or JSON",
    )
    add_model_arguments(parser, size_lists=True)
    parser.add_argument("--gamma-min", type=gamma_value, default=DEFAULT_GAMMA_RANGE[0])
    parser.add_argument("--gamma-max", type=gamma_value, default=DEFAULT_GAMMA_RANGE[1])
    parser.add_argument(
        "--steps", type=positive_int, default=DEFAULT_STEPS, help="Grid points (default: 61)"
    )
    parser.add_argument("--format", choices=("csv", "json"), default="csv", help="Output format")
    parser.add_argument(
        "--threads", type=positive_int, default=None, help="Worker threads (default: ASYM_THREADS)"
    )
    parser.add_argument("--job", type=Path, default=None, help="YAML job file (replaces flags)")
    add_output_argument(parser, "Output file (default: stdout)")
    return parser


def _json_payload(job: SweepJob, rows: list[SweepRow]) -> dict[str, Any]:
    footnotes = []
    if any(math.isnan(row.asymmetry) for row in rows):
        footnotes.append(
            "null values mark points where the operator is a multiple of the identity "
            "(q = 1 for the fock model), so the asymmetry degree is undefined"
        )
    return {
        "model": job.model,
        "pauli": job.pauli or DEFAULT_PAULI.get(job.model),
        "variant": job.variant,
        "rows": [
            {
                "param": row.param,
                "gamma": row.gamma,
                "asymmetry": row.asymmetry,
                "backend": row.backend,
            }
            for row in rows
        ],
        "footnotes": footnotes,
    }


def execute_sweep_command(args: argparse.Namespace) -> int:
    """Run the sweep and write its rows.

    Returns:
        Exit code 0; I/O and usage errors propagate to the caller.
    """
    job = SweepJob.from_yaml(args.job) if args.job else SweepJob.from_args(args)
    if args.job and args.threads:
        job = replace(job, threads=args.threads)
    rows = job.run()
    if args.format == "json":
        write_json(_json_payload(job, rows), args.out)
    else:
        write_sweep_csv(rows, args.out)
    if args.out is not None:
        err_console.print(f"[dim]Wrote {len(rows)} rows to {args.out}[/dim]")
    return ExitCode.OK


__all__ = ["SweepJob", "execute_sweep_command", "gamma_grid", "setup_sweep_parser"]
