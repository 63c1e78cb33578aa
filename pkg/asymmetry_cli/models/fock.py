"""su(2) on the two-mode Fock subspace with fixed total excitation number M.

Basis ordering is fixed as m1 = 0, 1, ..., M for the states |m1, M − m1⟩.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from asymmetry_cli.asymmetry import GeneratorSet
from asymmetry_cli.models.qnumber import q_number
from asymmetry_cli.operators import DenseOperator


@dataclass(frozen=True)
class FockSubspaceSpec:
    """The (M+1)-dimensional span of |m1, m2⟩ with m1 + m2 = M."""

    M: int  # noqa: N815

    def __post_init__(self) -> None:
        if int(self.M) != self.M or self.M < 1:
            msg = f"M must be a positive integer, got {self.M}"
            raise ValueError(msg)

    @property
    def dim(self) -> int:
        """Subspace dimension M + 1."""
        return self.M + 1

    def basis(self) -> list[tuple[int, int]]:
        """(m1, m2) occupation pairs in basis order."""
        return [(m1, self.M - m1) for m1 in range(self.M + 1)]


def fock_su2_generators(spec: FockSubspaceSpec) -> GeneratorSet:
    """Schwinger-boson generators J+ = a1† a2, J− = J+†, J3 = (n1 − n2)/2.

    J+|m1, m2⟩ = √((m1+1) m2) |m1+1, m2−1⟩.
    """
    m1 = np.arange(spec.M)
    raising = np.zeros((spec.dim, spec.dim))
    raising[m1 + 1, m1] = np.sqrt((m1 + 1) * (spec.M - m1))
    j_plus = DenseOperator(raising)
    j_three = DenseOperator.diagonal(np.arange(spec.dim) - spec.M / 2)
    return GeneratorSet(
        name=f"su2-fock-M{spec.M}",
        generators=(("J+", j_plus), ("J-", j_plus.adjoint()), ("J3", j_three)),
    )


def fock_qhamiltonian(spec: FockSubspaceSpec, gamma: float) -> DenseOperator:
    """H′ = diag([m1]_q + [m2]_q) on the subspace."""
    m1 = np.arange(spec.dim, dtype=float)
    return DenseOperator.diagonal(q_number(m1, gamma) + q_number(spec.M - m1, gamma))
