"""Tensor-term backend: sums of site-factored terms for N-spin chains.

A `TensorOperator` on N sites is stored as a coefficient vector of length T and a
factor array of shape (T, N, 2, 2). Identity factors are stored explicitly so every
operation follows one vectorized code path. Inner products factorize over sites,
so nothing of size 2^N is ever built unless `to_dense` is called.
"""

from __future__ import annotations

import functools
import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass

import numpy as np

from asymmetry_cli.operators.dense import DenseOperator, DimensionMismatchError
from asymmetry_cli.operators.site import SiteMatrix

logger = logging.getLogger(__name__)

# Elements per block when evaluating term-pair trace products.
_INNER_BLOCK_ELEMENTS = 4_000_000
# A factor's pivot is its first entry within this relative distance of the largest.
_PIVOT_SLACK = 1e-9
# Normalized factor lists that agree to this many decimals are merged by `compress`.
_KEY_DECIMALS = 12
COEFF_ATOL = 1e-15


class DenseCapExceededError(ValueError):
    """`to_dense` was asked for a matrix larger than the configured cap."""


@dataclass(frozen=True)
class TensorTerm:
    """One term: a coefficient times an ordered list of per-site factors."""

    coeff: complex
    factors: tuple[SiteMatrix, ...]


@dataclass(frozen=True, eq=False)
class TensorOperator:
    """Immutable formal sum of site-factored terms.

    Attributes:
        n_sites: Chain length N.
        coeffs: Read-only complex array of shape (T,).
        factors: Read-only complex array of shape (T, N, 2, 2).
    """

    n_sites: int
    coeffs: np.ndarray
    factors: np.ndarray

    def __post_init__(self) -> None:
        if self.n_sites < 1:
            msg = f"n_sites must be >= 1, got {self.n_sites}"
            raise ValueError(msg)
        coeffs = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        factors = np.array(self.factors, dtype=np.complex128)
        if factors.size == 0:
            factors = factors.reshape(0, self.n_sites, 2, 2)
        if factors.shape != (coeffs.shape[0], self.n_sites, 2, 2):
            msg = (
                f"factors must have shape ({coeffs.shape[0]}, {self.n_sites}, 2, 2), "
                f"got {factors.shape}"
            )
            raise ValueError(msg)
        if not (np.all(np.isfinite(coeffs)) and np.all(np.isfinite(factors))):
            msg = "TensorOperator entries must be finite"
            raise ValueError(msg)
        coeffs.flags.writeable = False
        factors.flags.writeable = False
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "factors", factors)

    # Construction

    @classmethod
    def zeros(cls, n_sites: int) -> TensorOperator:
        """The empty sum on `n_sites` sites."""
        return cls(n_sites, np.zeros(0), np.zeros((0, n_sites, 2, 2)))

    @classmethod
    def identity(cls, n_sites: int, coeff: complex = 1.0) -> TensorOperator:
        """coeff · I on `n_sites` sites."""
        return cls(n_sites, [coeff], np.broadcast_to(np.eye(2), (1, n_sites, 2, 2)))

    @classmethod
    def local(
        cls,
        n_sites: int,
        ops: Mapping[int, SiteMatrix],
        coeff: complex = 1.0,
    ) -> TensorOperator:
        """Single term with `ops[site]` on the given 0-based sites and identity elsewhere.

        Example:
            >>> from asymmetry_cli.operators.site import spin
            >>> TensorOperator.local(3, {0: spin("z")}).n_terms
            1
        """
        factors = np.broadcast_to(np.eye(2, dtype=np.complex128), (n_sites, 2, 2)).copy()
        for site, op in ops.items():
            if not 0 <= site < n_sites:
                msg = f"site {site} out of range for {n_sites} sites"
                raise ValueError(msg)
            factors[site] = op.entries
        return cls(n_sites, [coeff], factors[None])

    @classmethod
    def from_terms(cls, n_sites: int, terms: Iterable[TensorTerm]) -> TensorOperator:
        """Build from explicit `TensorTerm`s, each holding exactly `n_sites` factors."""
        coeffs = []
        factors = []
        for term in terms:
            if len(term.factors) != n_sites:
                msg = f"term has {len(term.factors)} factors, expected {n_sites}"
                raise ValueError(msg)
            coeffs.append(term.coeff)
            factors.append([f.entries for f in term.factors])
        if not coeffs:
            return cls.zeros(n_sites)
        return cls(n_sites, coeffs, factors)

    @classmethod
    def concatenate(cls, ops: Iterable[TensorOperator]) -> TensorOperator:
        """Sum of several operators on the same sites, without compression."""
        ops = list(ops)
        if not ops:
            msg = "concatenate needs at least one operator"
            raise ValueError(msg)
        for op in ops[1:]:
            ops[0]._check(op)
        return cls(
            ops[0].n_sites,
            np.concatenate([op.coeffs for op in ops]),
            np.concatenate([op.factors for op in ops]),
        )

    # Introspection

    @property
    def n_terms(self) -> int:
        """Number of stored terms."""
        return self.coeffs.shape[0]

    @property
    def dim(self) -> int:
        """Hilbert-space dimension 2^N."""
        return 2**self.n_sites

    @property
    def terms(self) -> tuple[TensorTerm, ...]:
        """The stored terms as `TensorTerm` records."""
        return tuple(
            TensorTerm(complex(c), tuple(SiteMatrix(f) for f in fs))
            for c, fs in zip(self.coeffs, self.factors, strict=True)
        )

    def support_mask(self) -> np.ndarray:
        """Boolean (T, N) mask of factors that are not a scalar multiple of the identity."""
        f = self.factors
        return (f[..., 0, 1] != 0) | (f[..., 1, 0] != 0) | (f[..., 0, 0] != f[..., 1, 1])

    def _check(self, other: object) -> None:
        if not isinstance(other, TensorOperator):
            msg = f"Cannot combine TensorOperator with {type(other).__name__}"
            raise DimensionMismatchError(msg)
        if other.n_sites != self.n_sites:
            msg = f"Site count mismatch: {self.n_sites} vs {other.n_sites}"
            raise DimensionMismatchError(msg)

    # Arithmetic

    def add(self, other: TensorOperator) -> TensorOperator:
        """Return self + other (terms concatenated)."""
        return TensorOperator.concatenate([self, other])

    def scale(self, factor: complex) -> TensorOperator:
        """Return factor * self."""
        return TensorOperator(self.n_sites, complex(factor) * self.coeffs, self.factors)

    def adjoint(self) -> TensorOperator:
        """Conjugate transpose, term by term."""
        return TensorOperator(
            self.n_sites, self.coeffs.conj(), self.factors.conj().swapaxes(-1, -2)
        )

    def multiply(self, other: TensorOperator) -> TensorOperator:
        """Operator product: every pair of terms multiplied site by site."""
        self._check(other)
        if self.n_terms == 0 or other.n_terms == 0:
            return TensorOperator.zeros(self.n_sites)
        products = np.matmul(self.factors[:, None], other.factors[None, :])
        return TensorOperator(
            self.n_sites,
            np.outer(self.coeffs, other.coeffs).reshape(-1),
            products.reshape(-1, self.n_sites, 2, 2),
        )

    def commutator(self, other: TensorOperator) -> TensorOperator:
        """Return self·other − other·self.

        Term pairs whose non-identity supports are disjoint commute exactly and are
        skipped, so the result has at most 2·|self|·|other| terms.
        """
        self._check(other)
        if self.n_terms == 0 or other.n_terms == 0:
            return TensorOperator.zeros(self.n_sites)
        overlap = (
            self.support_mask().astype(np.int32) @ other.support_mask().T.astype(np.int32)
        ) > 0
        rows, cols = np.nonzero(overlap)
        if rows.size == 0:
            return TensorOperator.zeros(self.n_sites)
        left = self.factors[rows]
        right = other.factors[cols]
        coeffs = self.coeffs[rows] * other.coeffs[cols]
        return TensorOperator(
            self.n_sites,
            np.concatenate([coeffs, -coeffs]),
            np.concatenate([np.matmul(left, right), np.matmul(right, left)]),
        )

    # Traces and norms

    def trace(self) -> complex:
        """Σ_terms coeff · ∏_sites tr(factor)."""
        site_traces = np.trace(self.factors, axis1=2, axis2=3)
        return complex(self.coeffs @ np.prod(site_traces, axis=1))

    def normalized_trace(self) -> complex:
        """tr(self)/2^N, computed without forming 2^N."""
        site_traces = 0.5 * np.trace(self.factors, axis1=2, axis2=3)
        return complex(self.coeffs @ np.prod(site_traces, axis=1))

    def traceless(self) -> TensorOperator:
        """self − tr(self)/d · I, as an extra identity term."""
        return self.add(TensorOperator.identity(self.n_sites, -self.normalized_trace()))

    def frobenius_inner(self, other: TensorOperator) -> complex:
        """tr(self† other) as Σ conj(c_a) c_b ∏_sites tr(f_a† f_b).

        Term pairs are processed in blocks so memory stays bounded.
        """
        self._check(other)
        if self.n_terms == 0 or other.n_terms == 0:
            return 0j
        n = self.n_sites
        left = self.factors.reshape(self.n_terms, n, 4).conj().transpose(1, 0, 2)
        right = other.factors.reshape(other.n_terms, n, 4).transpose(1, 2, 0)
        block = max(1, _INNER_BLOCK_ELEMENTS // (n * other.n_terms))
        total = 0j
        for start in range(0, self.n_terms, block):
            stop = start + block
            site_traces = np.matmul(left[:, start:stop], right)
            weights = np.prod(site_traces, axis=0)
            total += complex(self.coeffs[start:stop].conj() @ weights @ other.coeffs)
        return total

    # Conversion and simplification

    def to_dense(self, max_dim: int | None = None) -> DenseOperator:
        """Σ coeff · f_1 ⊗ … ⊗ f_N as a dense matrix.

        Args:
            max_dim: Largest dimension allowed; defaults to `settings.dense_cap`.

        Raises:
            DenseCapExceededError: If 2^N exceeds `max_dim`.
        """
        if max_dim is None:
            from asymmetry_cli.config import settings

            max_dim = settings.dense_cap
        if self.dim > max_dim:
            msg = f"2^{self.n_sites} = {self.dim} exceeds the dense cap {max_dim}"
            raise DenseCapExceededError(msg)
        out = np.zeros((self.dim, self.dim), dtype=np.complex128)
        for coeff, factors in zip(self.coeffs, self.factors, strict=True):
            out += coeff * functools.reduce(np.kron, factors)
        return DenseOperator(out)

    def compress(self, atol: float = COEFF_ATOL) -> TensorOperator:
        """Merge terms with proportional factor lists and drop negligible ones.

        Each factor is divided by its pivot entry and the pivots move into the
        coefficient; terms whose normalized factors agree to 12 decimals are summed.

        Args:
            atol: Terms with |coeff| below this are removed.
        """
        if self.n_terms == 0:
            return self
        n_terms, n = self.n_terms, self.n_sites
        flat = self.factors.reshape(n_terms, n, 4)
        mags = np.abs(flat)
        peak = mags.max(axis=2)
        vanishing = peak == 0
        pivot_idx = np.argmax(mags >= (peak * (1.0 - _PIVOT_SLACK))[..., None], axis=2)
        pivots = np.take_along_axis(flat, pivot_idx[..., None], axis=2)[..., 0]
        pivots = np.where(vanishing, 1.0, pivots)
        normalized = flat / pivots[..., None]
        coeffs = self.coeffs * np.prod(pivots, axis=1)
        coeffs = np.where(vanishing.any(axis=1), 0.0, coeffs)

        keys = np.round(np.concatenate([normalized.real, normalized.imag], axis=2), _KEY_DECIMALS)
        keys = keys.reshape(n_terms, -1) + 0.0
        _, first, inverse = np.unique(keys, axis=0, return_index=True, return_inverse=True)
        merged = np.zeros(first.shape[0], dtype=np.complex128)
        np.add.at(merged, inverse.reshape(-1), coeffs)

        keep = np.abs(merged) >= atol
        result = TensorOperator(
            n, merged[keep], normalized[first[keep]].reshape(-1, n, 2, 2)
        )
        logger.debug("compress: %d -> %d terms on %d sites", n_terms, result.n_terms, n)
        return result

    def __add__(self, other: TensorOperator) -> TensorOperator:
        return self.add(other)

    def __sub__(self, other: TensorOperator) -> TensorOperator:
        return self.add(other.scale(-1.0))

    def __neg__(self) -> TensorOperator:
        return self.scale(-1.0)

    def __matmul__(self, other: TensorOperator) -> TensorOperator:
        return self.multiply(other)

    def __mul__(self, factor: complex) -> TensorOperator:
        return self.scale(factor)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"TensorOperator(n_sites={self.n_sites}, n_terms={self.n_terms})"
