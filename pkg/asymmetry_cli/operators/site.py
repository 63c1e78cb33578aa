"""Single-site 2x2 matrices: spin operators in both Pauli conventions and q^{±σz}."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Literal, get_args

import numpy as np

PauliConvention = Literal["half", "full"]
SpinAxis = Literal["x", "y", "z", "+", "-"]

PAULI_CONVENTIONS: tuple[str, ...] = get_args(PauliConvention)


class ConventionError(ValueError):
    """Unknown convention name."""


# Spin-1/2 matrices with eigenvalues ±1/2; σ± = σx ± iσy has unit off-diagonal entries.
_HALF_SPIN = {
    "x": ((0.0, 0.5), (0.5, 0.0)),
    "y": ((0.0, -0.5j), (0.5j, 0.0)),
    "z": ((0.5, 0.0), (0.0, -0.5)),
    "+": ((0.0, 1.0), (0.0, 0.0)),
    "-": ((0.0, 0.0), (1.0, 0.0)),
}


def check_convention(convention: str) -> PauliConvention:
    """Validate a Pauli convention name.

    Raises:
        ConventionError: If the name is not `half` or `full`.
    """
    if convention not in PAULI_CONVENTIONS:
        msg = f"Unknown Pauli convention {convention!r}; expected one of {PAULI_CONVENTIONS}"
        raise ConventionError(msg)
    return convention  # type: ignore[return-value]


def convention_factor(convention: str) -> float:
    """Scale of a convention's spin matrices relative to the `half` ones."""
    return 1.0 if check_convention(convention) == "half" else 2.0


@dataclass(frozen=True, eq=False)
class SiteMatrix:
    """An immutable small square matrix acting on one site."""

    entries: np.ndarray

    def __post_init__(self) -> None:
        entries = np.array(self.entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            msg = f"SiteMatrix must be square, got shape {entries.shape}"
            raise ValueError(msg)
        if not np.all(np.isfinite(entries)):
            msg = "SiteMatrix entries must be finite"
            raise ValueError(msg)
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        """Local dimension."""
        return self.entries.shape[0]

    @classmethod
    def identity(cls, dim: int = 2) -> SiteMatrix:
        """Identity on one site."""
        return cls(np.eye(dim))

    def __repr__(self) -> str:
        return f"SiteMatrix({self.entries.tolist()!r})"


@functools.lru_cache(maxsize=None)
def spin(axis: SpinAxis, convention: PauliConvention = "half") -> SiteMatrix:
    """Return σx, σy, σz, σ+ or σ- in the requested convention.

    Args:
        axis: One of `x`, `y`, `z`, `+`, `-`.
        convention: `half` (eigenvalues ±1/2) or `full` (eigenvalues ±1).

    Returns:
        The cached, read-only site matrix.

    Example:
        >>> spin("z", "full").entries.real.tolist()
        [[1.0, 0.0], [0.0, -1.0]]
    """
    if axis not in _HALF_SPIN:
        msg = f"Unknown spin axis {axis!r}"
        raise ValueError(msg)
    return SiteMatrix(convention_factor(convention) * np.array(_HALF_SPIN[axis]))


def identity() -> SiteMatrix:
    """Identity on a spin-1/2 site."""
    return _IDENTITY


def q_power_sigma_z(gamma: float, sign: int = 1) -> SiteMatrix:
    """Return q^{sign·σz} = diag(q^{sign/2}, q^{-sign/2}) with q = e^γ.

    The exponent always uses the half-convention σz.
    """
    half = 0.5 * sign * gamma
    return SiteMatrix(np.diag([np.exp(half), np.exp(-half)]))


_IDENTITY = SiteMatrix.identity()
