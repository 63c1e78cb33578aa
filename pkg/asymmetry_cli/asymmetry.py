"""Asymmetry degree of an operator with respect to an algebra's generators.

The asymmetry degree is

    A(g, H) = Σ_j ‖[H, X_j]‖² / ‖H − tr(H)/d · I‖²

with ‖O‖² = tr(O†O). It vanishes exactly when H commutes with every generator X_j,
does not change when H is shifted by a multiple of the identity, and does not change
under conjugation by a unitary that commutes with the generators.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import Any, NamedTuple

import numpy as np

from asymmetry_cli.config import settings
from asymmetry_cli.operators import (
    Backend,
    DenseOperator,
    DimensionMismatchError,
    Operator,
    TensorOperator,
    add,
    adjoint,
    backend_of,
    commutator,
    frobenius_norm_sq,
    identity_like,
    is_hermitian,
    multiply,
    subtract,
    to_dense,
    traceless,
)

logger = logging.getLogger(__name__)

UNITARY_TOL = 1e-10
COMMUTING_TOL = 1e-10
MAX_CONDITION = 1e12


class ScalarOperatorError(ValueError):
    """The operator is a multiple of the identity, so the asymmetry degree is 0/0."""


class NumericalRangeError(ValueError):
    """A norm left double range, usually from a large γ on a large space."""


class PreconditionError(ValueError):
    """A transform does not meet the requirements of an invariance check."""


class SingularTransformError(PreconditionError):
    """A transform is not invertible."""


@dataclass(frozen=True)
class GeneratorSet:
    """A named list of operators representing an algebra basis.

    Attributes:
        name: Label such as `su2-fock-M2` or `suq2-chain-N4`.
        generators: (label, operator) pairs sharing one dimension and backend.
        gamma: Deformation parameter the set was built at (0 when undeformed).
        structure_scale: Factor λ relating the set to true spin generators:
            [J3, J±] = ±λ·J± and [J+, J−] = 2λ·J3.
        algebra: `su2` or `suq2`.
    """

    name: str
    generators: tuple[tuple[str, Operator], ...]
    gamma: float = 0.0
    structure_scale: float = 1.0
    algebra: str = "su2"

    def __post_init__(self) -> None:
        generators = tuple((str(label), op) for label, op in self.generators)
        if not generators:
            msg = f"GeneratorSet {self.name!r} is empty"
            raise ValueError(msg)
        first = generators[0][1]
        for label, op in generators[1:]:
            if backend_of(op) != backend_of(first) or op.dim != first.dim:
                msg = f"Generator {label!r} does not match the backend/dimension of the set"
                raise DimensionMismatchError(msg)
        object.__setattr__(self, "generators", generators)

    def __iter__(self) -> Iterator[tuple[str, Operator]]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def labels(self) -> tuple[str, ...]:
        """Generator labels in order."""
        return tuple(label for label, _ in self.generators)

    @property
    def dim(self) -> int:
        """Hilbert-space dimension."""
        return self.generators[0][1].dim

    @property
    def backend(self) -> Backend:
        """Backend shared by all generators."""
        return backend_of(self.generators[0][1])

    def operator(self, label: str) -> Operator:
        """Look up a generator by label."""
        for name, op in self.generators:
            if name == label:
                return op
        msg = f"No generator {label!r} in {self.name!r}; have {self.labels}"
        raise KeyError(msg)

    def to_backend(self, backend: Backend, max_dim: int | None = None) -> GeneratorSet:
        """Return the same set on another backend (tensor → dense only)."""
        if backend == self.backend:
            return self
        if backend == "dense":
            converted = tuple((label, to_dense(op, max_dim)) for label, op in self.generators)
            return GeneratorSet(
                self.name, converted, self.gamma, self.structure_scale, self.algebra
            )
        msg = "Dense generator sets cannot be converted to the tensor backend"
        raise ValueError(msg)


@dataclass(frozen=True)
class AsymmetryReport:
    """Result of one asymmetry evaluation.

    Attributes:
        total: A(g, h).
        per_generator: (label, ‖[h, X_j]‖²) pairs.
        norm_sq_traceless: The denominator ‖h̃‖².
        backend: Backend the computation ran on.
        model_params: Free-form metadata about the model.
        non_hermitian: Set when `h` was not Hermitian.
    """

    total: float
    per_generator: tuple[tuple[str, float], ...]
    norm_sq_traceless: float
    backend: str
    model_params: Mapping[str, Any] = field(default_factory=dict)
    non_hermitian: bool = False

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready representation."""
        return {
            "value": self.total,
            "per_generator": dict(self.per_generator),
            "norm_sq_traceless": self.norm_sq_traceless,
            "backend": self.backend,
            "params": dict(self.model_params),
            "non_hermitian": self.non_hermitian,
        }


class SymmetryCheck(NamedTuple):
    """Outcome of `is_symmetric`."""

    symmetric: bool
    max_norm: float
    norms: tuple[tuple[str, float], ...]


def _check_operand(g: GeneratorSet, h: Operator) -> None:
    if backend_of(h) != g.backend or h.dim != g.dim:
        msg = (
            f"Operator ({backend_of(h)}, d={h.dim}) does not match generator set "
            f"{g.name!r} ({g.backend}, d={g.dim})"
        )
        raise DimensionMismatchError(msg)


def _norm_sq(op: Operator) -> float:
    if isinstance(op, TensorOperator):
        op = op.compress()
    return frobenius_norm_sq(op)


def commutator_norm_sq(h: Operator, x: Operator) -> float:
    """‖[h, x]‖²."""
    return _norm_sq(commutator(h, x))


def asymmetry(
    g: GeneratorSet,
    h: Operator,
    *,
    scalar_eps: float | None = None,
    model_params: Mapping[str, Any] | None = None,
) -> AsymmetryReport:
    """Compute A(g, h) = Σ_j ‖[h, X_j]‖² / ‖h̃‖².

    Args:
        g: Generator set.
        h: Operator on the same space and backend.
        scalar_eps: Threshold on ‖h̃‖² below which `h` counts as scalar;
            defaults to `settings.scalar_eps`.
        model_params: Metadata copied into the report.

    Returns:
        The report with per-generator contributions.

    Raises:
        DimensionMismatchError: If `h` does not match `g`.
        ScalarOperatorError: If ‖h̃‖² ≤ scalar_eps.
        NumericalRangeError: If a norm overflows to inf or nan.
    """
    _check_operand(g, h)
    eps = settings.scalar_eps if scalar_eps is None else scalar_eps
    denominator = _norm_sq(traceless(h))
    if not np.isfinite(denominator):
        msg = f"‖h̃‖² = {denominator} is outside double range; reduce |γ| or the size"
        raise NumericalRangeError(msg)
    if denominator <= eps:
        msg = (
            "Operator is proportional to the identity "
            f"(‖h̃‖² = {denominator:.3e} ≤ {eps:.1e}); "
            "the asymmetry degree is undefined"
        )
        raise ScalarOperatorError(msg)

    per_generator = tuple((label, commutator_norm_sq(h, x)) for label, x in g)
    total = sum(value for _, value in per_generator) / denominator
    if not np.isfinite(total):
        msg = f"Σ‖[h, X]‖² is outside double range (A = {total}); reduce |γ| or the size"
        raise NumericalRangeError(msg)
    logger.debug("A(%s) = %.15g over d=%d on %s", g.name, total, g.dim, g.backend)
    return AsymmetryReport(
        total=total,
        per_generator=per_generator,
        norm_sq_traceless=denominator,
        backend=g.backend,
        model_params=dict(model_params or {}),
        non_hermitian=not is_hermitian(h),
    )


def is_symmetric(g: GeneratorSet, h: Operator, tol: float | None = None) -> SymmetryCheck:
    """Check whether `h` commutes with every generator.

    Args:
        g: Generator set.
        h: Operator on the same space and backend.
        tol: Absolute tolerance on each ‖[h, X_j]‖; defaults to `settings.symmetry_tol`.
    """
    _check_operand(g, h)
    tol = settings.symmetry_tol if tol is None else tol
    norms = tuple((label, float(np.sqrt(commutator_norm_sq(h, x)))) for label, x in g)
    max_norm = max(value for _, value in norms)
    return SymmetryCheck(max_norm <= tol, max_norm, norms)


def check_shift_invariance(
    g: GeneratorSet,
    h: Operator,
    lambdas: Iterable[float],
    tol: float = 1e-10,
) -> bool:
    """True iff |A(g, h + λI) − A(g, h)| ≤ tol for every λ."""
    base = asymmetry(g, h).total
    for lam in lambdas:
        shifted = add(h, identity_like(h, lam))
        if abs(asymmetry(g, shifted).total - base) > tol:
            logger.debug("shift by %g changed A(%s)", lam, g.name)
            return False
    return True


def _require_commuting(g: GeneratorSet, t: Operator, tol: float) -> None:
    for label, x in g:
        norm = float(np.sqrt(commutator_norm_sq(t, x)))
        if norm > tol:
            msg = f"Transform does not commute with {label!r} (‖[t, X]‖ = {norm:.3e})"
            raise PreconditionError(msg)


def check_unitary_invariance(
    g: GeneratorSet,
    h: Operator,
    t: Operator,
    tol: float = 1e-9,
) -> bool:
    """True iff A(g, t h t†) equals A(g, h) within `tol`.

    Raises:
        PreconditionError: If `t` is not unitary or does not commute with the generators.
    """
    _check_operand(g, t)
    defect = _norm_sq(subtract(multiply(t, adjoint(t)), identity_like(t)))
    if np.sqrt(defect) > UNITARY_TOL:
        msg = f"Transform is not unitary (‖t t† − I‖ = {np.sqrt(defect):.3e})"
        raise PreconditionError(msg)
    _require_commuting(g, t, COMMUTING_TOL)
    conjugated = multiply(multiply(t, h), adjoint(t))
    return abs(asymmetry(g, conjugated).total - asymmetry(g, h).total) <= tol


def explore_monotonicity(g: GeneratorSet, h: Operator, t: Operator) -> float:
    """Return A(g, t h t⁻¹) − A(g, h) for an invertible, generator-commuting `t`.

    The sign is not constrained; this is for empirical study of general similarity
    transforms. Runs on the dense backend.

    Raises:
        SingularTransformError: If `t` is singular or numerically close to it.
        PreconditionError: If `t` does not commute with the generators.
    """
    dense_g = g.to_backend("dense")
    dense_h = to_dense(h)
    dense_t = to_dense(t)
    _check_operand(dense_g, dense_t)
    condition = np.linalg.cond(dense_t.matrix)
    if not np.isfinite(condition) or condition > MAX_CONDITION:
        msg = f"Transform is singular (condition number {condition:.3e})"
        raise SingularTransformError(msg)
    scale = max(1.0, float(np.abs(dense_t.matrix).max()))
    _require_commuting(dense_g, dense_t, COMMUTING_TOL * scale)
    inverse = DenseOperator(np.linalg.inv(dense_t.matrix))
    similar = dense_t @ dense_h @ inverse
    return asymmetry(dense_g, similar).total - asymmetry(dense_g, dense_h).total


def casimir_exponential(casimir: DenseOperator, coefficient: complex) -> DenseOperator:
    """exp(coefficient · C) for a Hermitian Casimir C, via its eigendecomposition.

    `coefficient = iθ` gives a unitary; a real coefficient gives a positive-definite
    transform. Both commute with every generator that commutes with C.
    """
    values, vectors = np.linalg.eigh(casimir.matrix)
    return DenseOperator((vectors * np.exp(coefficient * values)) @ vectors.conj().T)
