"""Dense operator backend: exact matrices for small Hilbert spaces."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class DimensionMismatchError(ValueError):
    """Operands differ in dimension, site count, or backend."""


@dataclass(frozen=True, eq=False)
class DenseOperator:
    """An immutable d x d complex matrix.

    Attributes:
        matrix: Read-only complex128 array of shape (d, d).
    """

    matrix: np.ndarray

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
            msg = f"DenseOperator needs a non-empty square matrix, got shape {matrix.shape}"
            raise ValueError(msg)
        if not np.all(np.isfinite(matrix)):
            msg = "DenseOperator entries must be finite"
            raise ValueError(msg)
        matrix.flags.writeable = False
        object.__setattr__(self, "matrix", matrix)

    @property
    def dim(self) -> int:
        """Hilbert-space dimension d."""
        return self.matrix.shape[0]

    @classmethod
    def identity(cls, dim: int) -> DenseOperator:
        """Identity of dimension `dim`."""
        return cls(np.eye(dim))

    @classmethod
    def zeros(cls, dim: int) -> DenseOperator:
        """Zero operator of dimension `dim`."""
        return cls(np.zeros((dim, dim)))

    @classmethod
    def diagonal(cls, values: np.ndarray | list[float]) -> DenseOperator:
        """Diagonal operator with the given entries."""
        return cls(np.diag(np.asarray(values, dtype=np.complex128)))

    def _check(self, other: DenseOperator) -> None:
        if not isinstance(other, DenseOperator):
            msg = f"Cannot combine DenseOperator with {type(other).__name__}"
            raise DimensionMismatchError(msg)
        if other.dim != self.dim:
            msg = f"Dimension mismatch: {self.dim} vs {other.dim}"
            raise DimensionMismatchError(msg)

    def add(self, other: DenseOperator) -> DenseOperator:
        """Return self + other."""
        self._check(other)
        return DenseOperator(self.matrix + other.matrix)

    def scale(self, factor: complex) -> DenseOperator:
        """Return factor * self."""
        return DenseOperator(complex(factor) * self.matrix)

    def multiply(self, other: DenseOperator) -> DenseOperator:
        """Return the operator product self @ other."""
        self._check(other)
        return DenseOperator(self.matrix @ other.matrix)

    def adjoint(self) -> DenseOperator:
        """Conjugate transpose."""
        return DenseOperator(self.matrix.conj().T)

    def commutator(self, other: DenseOperator) -> DenseOperator:
        """Return self @ other - other @ self."""
        self._check(other)
        return DenseOperator(self.matrix @ other.matrix - other.matrix @ self.matrix)

    def trace(self) -> complex:
        """Matrix trace."""
        return complex(np.trace(self.matrix))

    def frobenius_inner(self, other: DenseOperator) -> complex:
        """tr(self† other)."""
        self._check(other)
        return complex(np.vdot(self.matrix, other.matrix))

    def traceless(self) -> DenseOperator:
        """self - tr(self)/d · I."""
        mean = np.trace(self.matrix) / self.dim
        return DenseOperator(self.matrix - mean * np.eye(self.dim))

    def kron(self, other: DenseOperator) -> DenseOperator:
        """Kronecker product with the standard entry layout."""
        if not isinstance(other, DenseOperator):
            msg = f"kron needs two DenseOperators, got {type(other).__name__}"
            raise DimensionMismatchError(msg)
        return DenseOperator(np.kron(self.matrix, other.matrix))

    def __add__(self, other: DenseOperator) -> DenseOperator:
        return self.add(other)

    def __sub__(self, other: DenseOperator) -> DenseOperator:
        return self.add(other.scale(-1.0))

    def __neg__(self) -> DenseOperator:
        return self.scale(-1.0)

    def __matmul__(self, other: DenseOperator) -> DenseOperator:
        return self.multiply(other)

    def __mul__(self, factor: complex) -> DenseOperator:
        return self.scale(factor)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"DenseOperator(dim={self.dim})"
