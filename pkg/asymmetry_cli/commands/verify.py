"""`asymmetry verify`: closed forms against the dense oracle, plus convention search."""

from __future__ import annotations

import argparse
import logging
import math
from typing import Any

from rich.table import Table

from asymmetry_cli.closed_forms import (
    CLOSED_FORM_MODELS,
    DEFAULT_REL_TOL,
    DiscrepancyReport,
    default_verification_suite,
)
from asymmetry_cli.commands.common import add_output_argument, finite_float
from asymmetry_cli.config import COLORS, ExitCode, console, settings
from asymmetry_cli.models import resolve_convention
from asymmetry_cli.reports import write_json

logger = logging.getLogger(__name__)

RESOLUTION_SIZES = (3, 4, 5)
RESOLUTION_GAMMA = 1.0


def setup_verify_parser(subparsers: Any) -> argparse.ArgumentParser:
    """Setup the verify subcommand parser."""
    parser = subparsers.add_parser(
        "verify",
        help="Check the closed forms against direct computation",
        description=(
            "Evaluate the as-written and corrected closed forms of every model against the "
            "dense asymmetry oracle, and search the chain conventions for su_q(2) symmetry"
        ),
    )
    parser.add_argument(
        "--model",
        choices=CLOSED_FORM_MODELS,
        default=None,
        help="Only verify this model (default: all)",
    )
    parser.add_argument(
        "--tol",
        type=finite_float,
        default=DEFAULT_REL_TOL,
        help="Relative tolerance for the corrected variants (default: 1e-9)",
    )
    add_output_argument(parser, "Write the JSON report here")
    return parser


def _params_label(report: DiscrepancyReport) -> str:
    return ", ".join(f"{k}={v}" for k, v in report.params.items()) or "-"


def _status(passed: bool) -> str:  # noqa: FBT001
    color = COLORS["pass"] if passed else COLORS["fail"]
    return f"[{color}]{'PASS' if passed else 'FAIL'}[/{color}]"


def _fmt(value: float) -> str:
    return "-" if math.isnan(value) else f"{value:.3e}"


def _report_table(reports: list[DiscrepancyReport]) -> Table:
    table = Table(
        title="Closed forms vs. dense oracle",
        show_header=True,
        header_style=f"bold {COLORS['primary']}",
    )
    table.add_column("Model", style="bold")
    table.add_column("Params")
    table.add_column("Points", justify="right")
    table.add_column("Corrected max |err|", justify="right")
    table.add_column("As-written max |err|", justify="right")
    table.add_column("As-written ratio", justify="right")
    table.add_column("Ratio residual", justify="right", style="dim")
    table.add_column("Status")
    for report in reports:
        corrected = report.comparison("corrected")
        as_written = report.comparison("as-written")
        table.add_row(
            report.model,
            _params_label(report),
            str(len(report.gammas)),
            _fmt(corrected.max_abs_error),
            _fmt(as_written.max_abs_error),
            "-" if math.isnan(as_written.fit_ratio) else f"{as_written.fit_ratio:.6g}",
            _fmt(as_written.fit_residual),
            _status(report.passed),
        )
    return table


def _resolution_table(resolutions: list[dict[str, Any]]) -> Table:
    table = Table(
        title=f"su_q(2) convention search at gamma={RESOLUTION_GAMMA:g}",
        show_header=True,
        header_style=f"bold {COLORS['primary']}",
    )
    table.add_column("N", justify="right", style="bold")
    table.add_column("Symmetric conventions")
    table.add_column("Printed-sign grid")
    for item in resolutions:
        table.add_row(
            str(item["N"]),
            ", ".join(item["symmetric"]) or "[red]none[/red]",
            ", ".join(item["printed_grid_symmetric"]) or "none",
        )
    return table


def execute_verify_command(args: argparse.Namespace) -> int:
    """Run the verification suite and summarize it.

    Returns:
        0 when every corrected variant matches and some convention is symmetric,
        5 otherwise. As-written mismatches never change the exit code.
    """
    cases = [c for c in default_verification_suite() if args.model in (None, c.model)]
    reports = []
    for case in cases:
        reports.append(case.run(rel_tol=args.tol))
        logger.debug("verified %s %s", case.model, dict(case.params))

    resolutions = []
    if args.model in (None, "chain"):
        for n in RESOLUTION_SIZES:
            resolution = resolve_convention(n, RESOLUTION_GAMMA, settings.symmetry_tol)
            resolutions.append(
                {
                    **resolution.to_dict(),
                    "printed_grid_symmetric": [
                        spec.label() for spec in resolution.printed_grid_symmetric
                    ],
                }
            )

    console.print()
    console.print(_report_table(reports))
    if resolutions:
        console.print(_resolution_table(resolutions))

    passed = all(r.passed for r in reports) and all(item["symmetric"] for item in resolutions)
    if args.out is not None:
        write_json(
            {
                "passed": passed,
                "rel_tol": args.tol,
                "reports": [r.to_dict() for r in reports],
                "convention_search": resolutions,
            },
            args.out,
        )
        console.print(f"[dim]Report written to {args.out}[/dim]")

    summary = "All corrected closed forms match" if passed else "Verification failed"
    console.print(f"\n[bold]{summary}[/bold]", style=COLORS["pass" if passed else "fail"])
    return ExitCode.OK if passed else ExitCode.VERIFY_FAILED


__all__ = ["execute_verify_command", "setup_verify_parser"]
