"""`asymmetry mesh`: export a deformed-sphere surface."""

from __future__ import annotations

import argparse
import logging
from typing import Any

from asymmetry_cli.commands.common import (
    add_output_argument,
    finite_float,
    gamma_value,
    positive_int,
)
from asymmetry_cli.config import ExitCode, err_console
from asymmetry_cli.geometry import SurfaceSpec, deformed_sphere_mesh, z_extent
from asymmetry_cli.reports import write_mesh_csv, write_mesh_obj

logger = logging.getLogger(__name__)


def setup_mesh_parser(subparsers: Any) -> argparse.ArgumentParser:
    """Setup the mesh subcommand parser."""
    parser = subparsers.add_parser(
        "mesh",
        help="Export a q-deformed sphere as OBJ or a CSV point cloud",
        description="Triangulate x^2 + y^2 + sinh^2(gamma z)/(gamma sinh gamma) = r^2",
    )
    parser.add_argument("--gamma", type=gamma_value, default=1.0, help="Deformation (default: 1)")
    parser.add_argument("--radius", type=finite_float, default=1.0, help="Level r (default: 1)")
    parser.add_argument("--n-z", type=positive_int, default=64, help="z slices (default: 64)")
    parser.add_argument("--n-phi", type=positive_int, default=64, help="Azimuths (default: 64)")
    parser.add_argument("--format", choices=("obj", "csv"), default="obj", help="Output format")
    add_output_argument(parser, "Output file (default: stdout)")
    return parser


def execute_mesh_command(args: argparse.Namespace) -> int:
    """Build the mesh and write it.

    Returns:
        Exit code 0; invalid sizes raise `ValueError`, unwritable paths `OSError`.
    """
    spec = SurfaceSpec(args.gamma, args.radius, args.n_z, args.n_phi)
    mesh = deformed_sphere_mesh(spec)
    if args.format == "obj":
        write_mesh_obj(mesh, args.out)
    else:
        write_mesh_csv(mesh, args.out)
    if args.out is not None:
        err_console.print(
            f"[dim]Wrote {mesh.n_vertices} vertices, {mesh.n_faces} faces "
            f"(z_max = {z_extent(spec):.6g}, max residual = {mesh.max_residual(spec):.1e}) "
            f"to {args.out}[/dim]"
        )
    return ExitCode.OK


__all__ = ["execute_mesh_command", "setup_mesh_parser"]
