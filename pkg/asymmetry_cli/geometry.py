"""Level surfaces of the q-deformed sphere x² + y² + sinh²(γz)/(γ sinh γ) = r².

The surface is a body of revolution about the z axis. It is sampled on cosine-spaced
z slices (denser near the poles) and uniform azimuths, with a single vertex at each
pole.
"""

from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from asymmetry_cli.models.qnumber import DeformationParam

logger = logging.getLogger(__name__)

SPHERE_GAMMA = 1e-6
MIN_RESOLUTION = 3


@dataclass(frozen=True)
class SurfaceSpec:
    """Deformation, level and sampling resolution of one surface."""

    gamma: float
    radius: float = 1.0
    n_z: int = 64
    n_phi: int = 64

    def __post_init__(self) -> None:
        DeformationParam(self.gamma)
        if not self.radius > 0:
            msg = f"radius must be positive, got {self.radius}"
            raise ValueError(msg)
        if self.n_z < MIN_RESOLUTION or self.n_phi < MIN_RESOLUTION:
            msg = f"resolutions must be >= {MIN_RESOLUTION}, got ({self.n_z}, {self.n_phi})"
            raise ValueError(msg)

    @property
    def is_sphere(self) -> bool:
        """True when the deformation is negligible and the round sphere is used."""
        return abs(self.gamma) < SPHERE_GAMMA


def _z_term(z: np.ndarray | float, spec: SurfaceSpec) -> np.ndarray:
    z = np.asarray(z, dtype=float)
    if spec.is_sphere:
        return z**2
    return np.sinh(spec.gamma * z) ** 2 / (spec.gamma * math.sinh(spec.gamma))


def implicit_residual(points: np.ndarray, spec: SurfaceSpec) -> np.ndarray:
    """x² + y² + sinh²(γz)/(γ sinh γ) − r² for an (..., 3) array of points."""
    p = np.asarray(points, dtype=float)
    return p[..., 0] ** 2 + p[..., 1] ** 2 + _z_term(p[..., 2], spec) - spec.radius**2


def z_extent(spec: SurfaceSpec) -> float:
    """Height of the north pole: asinh(r √(γ sinh γ))/|γ|, or r for the sphere."""
    if spec.is_sphere:
        return spec.radius
    g = abs(spec.gamma)
    return math.asinh(spec.radius * math.sqrt(g * math.sinh(g))) / g


def profile_radius(z: np.ndarray | float, spec: SurfaceSpec) -> np.ndarray:
    """Distance of the surface from the axis at height z (0 beyond the poles)."""
    return np.sqrt(np.maximum(spec.radius**2 - _z_term(z, spec), 0.0))


@dataclass(frozen=True, eq=False)
class Mesh:
    """Triangle mesh with (V, 3) float vertices and (F, 3) int faces, both read-only."""

    vertices: np.ndarray
    faces: np.ndarray

    def __post_init__(self) -> None:
        vertices = np.array(self.vertices, dtype=float)
        faces = np.array(self.faces, dtype=np.int64)
        vertices.setflags(write=False)
        faces.setflags(write=False)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "faces", faces)

    @property
    def n_vertices(self) -> int:
        """Number of vertices."""
        return self.vertices.shape[0]

    @property
    def n_faces(self) -> int:
        """Number of triangles."""
        return self.faces.shape[0]

    def _directed_edges(self) -> list[tuple[int, int]]:
        f = self.faces
        return [
            (int(a), int(b))
            for a, b in np.concatenate([f[:, [0, 1]], f[:, [1, 2]], f[:, [2, 0]]])
        ]

    def edge_use_counts(self) -> Counter[tuple[int, int]]:
        """How many faces use each undirected edge."""
        return Counter((min(a, b), max(a, b)) for a, b in self._directed_edges())

    def is_watertight(self) -> bool:
        """Closed, consistently oriented two-manifold.

        Every undirected edge is shared by exactly two faces, traversed once in each
        direction.
        """
        directed = self._directed_edges()
        if len(set(directed)) != len(directed):
            return False
        return all(count == 2 for count in self.edge_use_counts().values())  # noqa: PLR2004

    def signed_volume(self) -> float:
        """Enclosed volume; positive when faces wind counter-clockwise seen from outside."""
        v = self.vertices[self.faces]
        return float(np.sum(np.einsum("ij,ij->i", v[:, 0], np.cross(v[:, 1], v[:, 2])))) / 6.0

    def max_residual(self, spec: SurfaceSpec) -> float:
        """Largest |implicit residual| over the vertices."""
        return float(np.max(np.abs(implicit_residual(self.vertices, spec))))


def _slice_heights(spec: SurfaceSpec) -> np.ndarray:
    # Cosine spacing, mirrored so that z -> -z symmetry is exact.
    n = spec.n_z
    z_max = z_extent(spec)
    z = -z_max * np.cos(np.pi * np.arange(n) / (n - 1))
    half = n // 2
    z[n - half :] = -z[:half][::-1]
    if n % 2:
        z[half] = 0.0
    z[0], z[-1] = -z_max, z_max
    return z


def deformed_sphere_mesh(spec: SurfaceSpec) -> Mesh:
    """Triangulate the level surface.

    Vertex 0 is the south pole and the last vertex the north pole. Ring k (slice k+1)
    occupies indices 1 + k·n_phi .. (k+1)·n_phi. There are (n_z − 2)·n_phi + 2
    vertices and 2·(n_z − 3)·n_phi + 2·n_phi faces, wound outward.
    """
    n_rings = spec.n_z - 2
    n_phi = spec.n_phi
    z = _slice_heights(spec)
    ring_z = z[1:-1]
    rho = profile_radius(ring_z, spec)
    phi = 2.0 * np.pi * np.arange(n_phi) / n_phi

    rings = np.empty((n_rings, n_phi, 3))
    rings[..., 0] = rho[:, None] * np.cos(phi)[None, :]
    rings[..., 1] = rho[:, None] * np.sin(phi)[None, :]
    rings[..., 2] = ring_z[:, None]
    vertices = np.concatenate([[[0.0, 0.0, z[0]]], rings.reshape(-1, 3), [[0.0, 0.0, z[-1]]]])

    j = np.arange(n_phi)
    j_next = (j + 1) % n_phi
    faces = []
    for k in range(n_rings - 1):
        a = 1 + k * n_phi + j
        b = 1 + k * n_phi + j_next
        c = 1 + (k + 1) * n_phi + j_next
        d = 1 + (k + 1) * n_phi + j
        faces.append(np.stack([a, b, c], axis=1))
        faces.append(np.stack([a, c, d], axis=1))
    south = np.zeros(n_phi, dtype=np.int64)
    faces.append(np.stack([south, 1 + j_next, 1 + j], axis=1))
    north = np.full(n_phi, vertices.shape[0] - 1)
    last = 1 + (n_rings - 1) * n_phi
    faces.append(np.stack([north, last + j, last + j_next], axis=1))

    mesh = Mesh(vertices, np.concatenate(faces))
    logger.debug("mesh gamma=%g: %d vertices, %d faces", spec.gamma, mesh.n_vertices, mesh.n_faces)
    return mesh
