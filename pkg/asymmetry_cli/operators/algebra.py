"""Backend-agnostic operator functions over dense and tensor-term operators."""

from __future__ import annotations

from typing import Literal, TypeAlias

import numpy as np

from asymmetry_cli.operators.dense import DenseOperator, DimensionMismatchError
from asymmetry_cli.operators.tensor import COEFF_ATOL, TensorOperator

Operator: TypeAlias = DenseOperator | TensorOperator
Backend = Literal["dense", "tensor"]


def backend_of(a: Operator) -> Backend:
    """Name of the backend holding `a`."""
    if isinstance(a, DenseOperator):
        return "dense"
    if isinstance(a, TensorOperator):
        return "tensor"
    msg = f"Not an operator: {type(a).__name__}"
    raise TypeError(msg)


def _same_backend(a: Operator, b: Operator) -> None:
    if backend_of(a) != backend_of(b):
        msg = f"Backend mismatch: {backend_of(a)} vs {backend_of(b)}"
        raise DimensionMismatchError(msg)


def hilbert_dim(a: Operator) -> int:
    """Dimension d of the space `a` acts on."""
    return a.dim


def identity_like(a: Operator, coeff: complex = 1.0) -> Operator:
    """coeff · I on the same space and backend as `a`."""
    if isinstance(a, TensorOperator):
        return TensorOperator.identity(a.n_sites, coeff)
    return DenseOperator.identity(a.dim).scale(coeff)


def kron(a: DenseOperator, b: DenseOperator) -> DenseOperator:
    """Kronecker product a ⊗ b."""
    return a.kron(b)


def add(a: Operator, b: Operator) -> Operator:
    """a + b."""
    _same_backend(a, b)
    return a.add(b)


def subtract(a: Operator, b: Operator) -> Operator:
    """a − b."""
    _same_backend(a, b)
    return a.add(b.scale(-1.0))


def scale(a: Operator, factor: complex) -> Operator:
    """factor · a."""
    return a.scale(factor)


def multiply(a: Operator, b: Operator) -> Operator:
    """Operator product a·b."""
    _same_backend(a, b)
    return a.multiply(b)


def adjoint(a: Operator) -> Operator:
    """Conjugate transpose a†."""
    return a.adjoint()


def commutator(a: Operator, b: Operator) -> Operator:
    """[a, b] = ab − ba."""
    _same_backend(a, b)
    return a.commutator(b)


def trace(a: Operator) -> complex:
    """tr(a)."""
    return a.trace()


def traceless(a: Operator) -> Operator:
    """a − tr(a)/d · I."""
    return a.traceless()


def frobenius_inner(a: Operator, b: Operator) -> complex:
    """tr(a† b)."""
    _same_backend(a, b)
    return a.frobenius_inner(b)


def frobenius_norm_sq(a: Operator) -> float:
    """‖a‖² = tr(a† a), clipped at zero against rounding."""
    return max(frobenius_inner(a, a).real, 0.0)


def is_hermitian(a: Operator, tol: float = 1e-12) -> bool:
    """True when ‖a − a†‖ ≤ tol · ‖a‖."""
    diff = subtract(a, adjoint(a))
    if isinstance(diff, TensorOperator):
        diff = diff.compress()
    return frobenius_norm_sq(diff) <= tol**2 * frobenius_norm_sq(a)


def to_dense(a: Operator, max_dim: int | None = None) -> DenseOperator:
    """Dense form of `a` (a no-op for dense operators)."""
    if isinstance(a, DenseOperator):
        return a
    return a.to_dense(max_dim)


def compress(t: TensorOperator, atol: float = COEFF_ATOL) -> TensorOperator:
    """Merge proportional terms of `t` and drop negligible ones."""
    return t.compress(atol)


def allclose(a: Operator, b: Operator, atol: float = 1e-12) -> bool:
    """Entrywise comparison after densifying both sides."""
    return bool(np.allclose(to_dense(a).matrix, to_dense(b).matrix, rtol=0.0, atol=atol))
