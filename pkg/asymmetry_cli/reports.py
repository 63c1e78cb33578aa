"""Output files: sweep CSV, JSON reports and mesh exports.

Floats are written with `repr`, the shortest string that round-trips. Files use
UTF-8 and `\\n` line endings and contain no timestamps, so identical inputs give
identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from collections.abc import Iterable, Iterator, Mapping
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import TYPE_CHECKING, Any, TextIO

if TYPE_CHECKING:
    from asymmetry_cli.geometry import Mesh

SWEEP_HEADER = ("model", "param", "gamma", "asymmetry", "backend")


@dataclass(frozen=True)
class SweepRow:
    """One grid point of a sweep."""

    model: str
    param: str
    gamma: float
    asymmetry: float
    backend: str

    def as_csv(self) -> list[str]:
        """Cells in header order."""
        return [self.model, self.param, repr(self.gamma), repr(self.asymmetry), self.backend]


@contextmanager
def open_output(path: Path | None) -> Iterator[TextIO]:
    """Open `path` for writing, or yield stdout when it is None.

    Raises:
        OSError: If the file cannot be created.
    """
    if path is None:
        yield sys.stdout
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        yield f


def write_sweep_csv(rows: Iterable[SweepRow], path: Path | None = None) -> None:
    """Write sweep rows under the `model,param,gamma,asymmetry,backend` header."""
    with open_output(path) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(SWEEP_HEADER)
        writer.writerows(row.as_csv() for row in rows)


def read_sweep_csv(source: Path | str) -> list[SweepRow]:
    """Parse a file written by `write_sweep_csv`; `nan` and `inf` are accepted.

    Args:
        source: File path, or the CSV text itself when given as a `str`.

    Raises:
        ValueError: If the header does not match.
    """
    text = source.read_text(encoding="utf-8") if isinstance(source, Path) else source
    reader = csv.reader(io.StringIO(text))
    header = tuple(next(reader, ()))
    if header != SWEEP_HEADER:
        msg = f"Unexpected sweep header {header}; expected {SWEEP_HEADER}"
        raise ValueError(msg)
    return [
        SweepRow(model, param, float(gamma), float(value), backend)
        for model, param, gamma, value, backend in reader
    ]


def json_safe(value: Any) -> Any:
    """Replace non-finite floats so the output is strict JSON (nan → null, ±inf → "inf")."""
    if isinstance(value, float):
        if math.isnan(value):
            return None
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return value
    if isinstance(value, Mapping):
        return {str(k): json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(v) for v in value]
    return value


def dump_json(data: Any) -> str:
    """Indented strict JSON with a trailing newline."""
    return json.dumps(json_safe(data), indent=2, allow_nan=False) + "\n"


def write_json(data: Any, path: Path | None = None) -> None:
    """Write `dump_json(data)` to `path` or stdout."""
    with open_output(path) as f:
        f.write(dump_json(data))


def write_mesh_obj(mesh: Mesh, path: Path | None = None, *, name: str = "deformed_sphere") -> None:
    """Wavefront OBJ with `v` and 1-based `f` records."""
    with open_output(path) as f:
        f.write(f"o {name}\n")
        for x, y, z in mesh.vertices.tolist():
            f.write(f"v {x!r} {y!r} {z!r}\n")
        for a, b, c in (mesh.faces + 1).tolist():
            f.write(f"f {a} {b} {c}\n")


def write_mesh_csv(mesh: Mesh, path: Path | None = None) -> None:
    """Vertex point cloud under an `x,y,z` header."""
    with open_output(path) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(("x", "y", "z"))
        writer.writerows([repr(c) for c in vertex] for vertex in mesh.vertices.tolist())
