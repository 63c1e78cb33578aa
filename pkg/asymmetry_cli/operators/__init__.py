"""Operator algebra over dense matrices and tensor-term sums."""

from asymmetry_cli.operators.algebra import (
    Backend,
    Operator,
    add,
    adjoint,
    allclose,
    backend_of,
    commutator,
    compress,
    frobenius_inner,
    frobenius_norm_sq,
    hilbert_dim,
    identity_like,
    is_hermitian,
    kron,
    multiply,
    scale,
    subtract,
    to_dense,
    trace,
    traceless,
)
from asymmetry_cli.operators.dense import DenseOperator, DimensionMismatchError
from asymmetry_cli.operators.site import (
    PAULI_CONVENTIONS,
    ConventionError,
    PauliConvention,
    SiteMatrix,
    check_convention,
    convention_factor,
    identity,
    q_power_sigma_z,
    spin,
)
from asymmetry_cli.operators.tensor import (
    DenseCapExceededError,
    TensorOperator,
    TensorTerm,
)

__all__ = [
    "PAULI_CONVENTIONS",
    "Backend",
    "ConventionError",
    "DenseCapExceededError",
    "DenseOperator",
    "DimensionMismatchError",
    "Operator",
    "PauliConvention",
    "SiteMatrix",
    "TensorOperator",
    "TensorTerm",
    "add",
    "adjoint",
    "allclose",
    "backend_of",
    "check_convention",
    "commutator",
    "compress",
    "convention_factor",
    "frobenius_inner",
    "frobenius_norm_sq",
    "hilbert_dim",
    "identity",
    "identity_like",
    "is_hermitian",
    "kron",
    "multiply",
    "q_power_sigma_z",
    "scale",
    "spin",
    "subtract",
    "to_dense",
    "trace",
    "traceless",
]
