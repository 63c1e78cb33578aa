"""q-numbers and the deformation parameter."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from asymmetry_cli.config import MAX_ABS_GAMMA, SMALL_GAMMA


def q_number(x: float | np.ndarray, gamma: float) -> float | np.ndarray:
    """[x]_q = (q^x − q^{−x})/(q − q^{−1}) = sinh(γx)/sinh(γ), with q = e^γ.

    Falls back to the q → 1 limit `x` when |γ| < 1e-8.

    Args:
        x: Real number or array.
        gamma: Deformation parameter γ = log q.

    Example:
        >>> round(q_number(2, 1.0), 5)
        3.08616
    """
    if abs(gamma) < SMALL_GAMMA:
        return x if isinstance(x, np.ndarray) else float(x)
    result = np.sinh(gamma * np.asarray(x, dtype=float)) / math.sinh(gamma)
    return result if isinstance(x, np.ndarray) else float(result)


@dataclass(frozen=True)
class DeformationParam:
    """γ = log q, with q = e^γ.

    Rejects non-finite values and |γ| > MAX_ABS_GAMMA, past which cosh(γ)²
    leaves double range.
    """

    gamma: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.gamma):
            msg = f"gamma must be finite, got {self.gamma}"
            raise ValueError(msg)
        if abs(self.gamma) > MAX_ABS_GAMMA:
            msg = f"|gamma| must be at most {MAX_ABS_GAMMA:g}, got {self.gamma:g}"
            raise ValueError(msg)

    @property
    def q(self) -> float:
        """q = e^γ (always positive)."""
        return math.exp(self.gamma)

    @property
    def is_undeformed(self) -> bool:
        """True in the q → 1 limit."""
        return abs(self.gamma) < SMALL_GAMMA
