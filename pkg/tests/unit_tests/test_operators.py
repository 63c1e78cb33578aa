"""Tests for the dense and tensor-term operator backends."""

import functools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from asymmetry_cli.operators import (
    ConventionError,
    DenseCapExceededError,
    DenseOperator,
    DimensionMismatchError,
    SiteMatrix,
    TensorOperator,
    TensorTerm,
    adjoint,
    allclose,
    backend_of,
    check_convention,
    commutator,
    compress,
    convention_factor,
    frobenius_inner,
    frobenius_norm_sq,
    identity_like,
    is_hermitian,
    kron,
    multiply,
    q_power_sigma_z,
    spin,
    subtract,
    to_dense,
    trace,
    traceless,
)

entries = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)


@st.composite
def tensor_pairs(draw: st.DrawFn, max_sites: int = 4, max_terms: int = 3) -> tuple:
    """Two random tensor operators on the same number of sites."""
    n = draw(st.integers(1, max_sites))

    def one() -> TensorOperator:
        t = draw(st.integers(1, max_terms))
        real = draw(arrays(np.float64, (t, n, 2, 2), elements=entries))
        imag = draw(arrays(np.float64, (t, n, 2, 2), elements=entries))
        coeffs = draw(arrays(np.float64, (t,), elements=entries))
        return TensorOperator(n, coeffs, real + 1j * imag)

    return one(), one()


def dense_of(t: TensorOperator) -> np.ndarray:
    return t.to_dense().matrix


class TestSiteMatrices:
    """Tests for single-site spin matrices."""

    def test_half_spin_eigenvalues(self) -> None:
        """Test the half convention has eigenvalues ±1/2."""
        assert np.allclose(np.linalg.eigvalsh(spin("z", "half").entries), [-0.5, 0.5])
        assert np.allclose(np.linalg.eigvalsh(spin("x", "half").entries), [-0.5, 0.5])

    def test_full_is_twice_half(self) -> None:
        """Test every axis in the full convention is twice the half one."""
        for axis in ("x", "y", "z", "+", "-"):
            assert np.allclose(spin(axis, "full").entries, 2 * spin(axis, "half").entries)

    def test_su2_relations(self) -> None:
        """Test [Sx, Sy] = i Sz and σ± = σx ± iσy."""
        sx, sy, sz = (spin(a).entries for a in "xyz")
        assert np.allclose(sx @ sy - sy @ sx, 1j * sz)
        assert np.allclose(spin("+").entries, sx + 1j * sy)
        assert np.allclose(spin("-").entries, sx - 1j * sy)

    def test_q_power_sigma_z(self) -> None:
        """Test q^{±σz} = diag(e^{±γ/2}, e^{∓γ/2})."""
        up = q_power_sigma_z(1.0).entries
        down = q_power_sigma_z(1.0, sign=-1).entries
        assert np.allclose(np.diag(up), [math.exp(0.5), math.exp(-0.5)])
        assert np.allclose(up @ down, np.eye(2))

    def test_read_only(self) -> None:
        """Test site entries cannot be mutated in place."""
        with pytest.raises(ValueError):
            spin("z").entries[0, 0] = 3.0

    def test_rejects_non_square(self) -> None:
        with pytest.raises(ValueError, match="square"):
            SiteMatrix(np.zeros((2, 3)))

    def test_conventions(self) -> None:
        """Test convention validation and scale factors."""
        assert check_convention("half") == "half"
        assert convention_factor("full") == 2.0
        with pytest.raises(ConventionError, match="quarter"):
            check_convention("quarter")


class TestDenseOperator:
    """Tests for exact matrix operators."""

    def test_kron_example(self) -> None:
        """Test σ+ ⊗ q^{σz} at γ=1 places e^{±1/2} in the upper-right block."""
        a = DenseOperator(spin("+").entries)
        b = DenseOperator(q_power_sigma_z(1.0).entries)
        m = kron(a, b).matrix
        assert m.shape == (4, 4)
        assert m[0, 2] == pytest.approx(math.exp(0.5))
        assert m[1, 3] == pytest.approx(math.exp(-0.5))
        assert np.count_nonzero(m) == 2

    def test_commutator_of_pauli(self) -> None:
        """Test [σ+, σ-] = 2σz in the half convention."""
        plus = DenseOperator(spin("+").entries)
        minus = DenseOperator(spin("-").entries)
        assert np.allclose(commutator(plus, minus).matrix, 2 * spin("z").entries)

    def test_traceless(self) -> None:
        """Test the traceless part has zero trace and keeps off-diagonal entries."""
        a = DenseOperator([[3.0, 1.0], [2.0, 5.0]])
        t = traceless(a)
        assert abs(trace(t)) < 1e-14
        assert np.allclose(t.matrix, [[-1.0, 1.0], [2.0, 1.0]])

    def test_frobenius(self) -> None:
        """Test tr(a†b) and the clipped squared norm."""
        a = DenseOperator([[1.0, 1j], [0.0, 2.0]])
        assert frobenius_norm_sq(a) == pytest.approx(6.0)
        assert frobenius_inner(a, a) == pytest.approx(6.0)

    def test_dimension_mismatch(self) -> None:
        with pytest.raises(DimensionMismatchError):
            commutator(DenseOperator.identity(2), DenseOperator.identity(4))

    def test_rejects_non_finite(self) -> None:
        with pytest.raises(ValueError, match="finite"):
            DenseOperator([[math.nan, 0.0], [0.0, 1.0]])

    def test_is_hermitian(self) -> None:
        assert is_hermitian(DenseOperator(spin("x").entries))
        assert not is_hermitian(DenseOperator(spin("+").entries))


class TestTensorOperator:
    """Tests for sums of site-factored terms."""

    def test_local_matches_kron(self) -> None:
        """Test a local term densifies to the Kronecker product with identities."""
        t = TensorOperator.local(3, {1: spin("+"), 2: spin("z")}, coeff=2.0)
        expected = 2.0 * functools.reduce(
            np.kron, [np.eye(2), spin("+").entries, spin("z").entries]
        )
        assert np.allclose(dense_of(t), expected)

    def test_local_rejects_bad_site(self) -> None:
        with pytest.raises(ValueError, match="out of range"):
            TensorOperator.local(2, {2: spin("z")})

    def test_from_terms(self) -> None:
        """Test explicit terms round into the factor array."""
        term = TensorTerm(0.5, (spin("z"), SiteMatrix.identity()))
        t = TensorOperator.from_terms(2, [term, term])
        assert t.n_terms == 2
        assert t.terms[0].coeff == 0.5
        with pytest.raises(ValueError, match="expected 2"):
            TensorOperator.from_terms(2, [TensorTerm(1.0, (spin("z"),))])

    def test_zero_operator(self) -> None:
        z = TensorOperator.zeros(3)
        assert z.n_terms == 0
        assert np.allclose(dense_of(z), 0.0)
        assert frobenius_norm_sq(z) == 0.0

    def test_commutator_skips_disjoint_supports(self) -> None:
        """Test operators on different sites give an empty commutator."""
        a = TensorOperator.local(3, {0: spin("z")})
        b = TensorOperator.local(3, {2: spin("x")})
        assert a.commutator(b).n_terms == 0

    def test_support_mask(self) -> None:
        """Test scaled identities do not count as support."""
        t = TensorOperator.local(3, {0: spin("z"), 1: SiteMatrix(3.0 * np.eye(2))})
        assert t.support_mask().tolist() == [[True, False, False]]

    def test_compress_merges_and_cancels(self) -> None:
        """Test proportional terms merge and opposite terms cancel."""
        a = TensorOperator.local(3, {0: spin("z", "full")})
        b = TensorOperator.local(3, {0: spin("z", "half")}, coeff=2.0)
        merged = compress(a + b)
        assert merged.n_terms == 1
        assert np.allclose(dense_of(merged), 2 * dense_of(a))
        assert compress(a - b).n_terms == 0

    def test_compress_drops_vanishing_factor(self) -> None:
        t = TensorOperator.local(2, {0: SiteMatrix(np.zeros((2, 2)))})
        assert compress(t).n_terms == 0

    def test_traceless_and_normalized_trace(self) -> None:
        """Test the traceless part removes the identity component."""
        t = TensorOperator.local(2, {0: spin("z")}) + TensorOperator.identity(2, 3.0)
        assert t.normalized_trace() == pytest.approx(3.0)
        assert abs(traceless(t).trace()) < 1e-12

    def test_dense_cap(self) -> None:
        """Test densifying beyond the cap is refused."""
        t = TensorOperator.identity(5)
        with pytest.raises(DenseCapExceededError, match="exceeds"):
            t.to_dense(max_dim=16)

    def test_site_count_mismatch(self) -> None:
        with pytest.raises(DimensionMismatchError, match="Site count"):
            commutator(TensorOperator.identity(2), TensorOperator.identity(3))

    def test_backend_mismatch(self) -> None:
        with pytest.raises(DimensionMismatchError, match="Backend"):
            multiply(TensorOperator.identity(1), DenseOperator.identity(2))

    def test_backend_of(self) -> None:
        assert backend_of(TensorOperator.identity(1)) == "tensor"
        assert backend_of(DenseOperator.identity(2)) == "dense"
        with pytest.raises(TypeError):
            backend_of(np.eye(2))  # type: ignore[arg-type]

    def test_identity_like(self) -> None:
        doubled = identity_like(TensorOperator.zeros(2), 2.0)
        assert allclose(doubled, DenseOperator.identity(4) * 2.0)

    def test_large_chain_inner_product_without_dense(self) -> None:
        """Test ‖Σ_i σz_i‖² = N·2^N/2 at a size that cannot be densified."""
        n = 60
        total = TensorOperator.concatenate(
            TensorOperator.local(n, {i: spin("z", "full")}) for i in range(n)
        )
        norm_sq = frobenius_norm_sq(total)
        assert norm_sq == pytest.approx(n * 2.0**n, rel=1e-12)
        assert total.normalized_trace() == 0


class TestBackendEquivalence:
    """Property tests: tensor results densify to the dense results."""

    @given(tensor_pairs())
    def test_commutator(self, pair: tuple[TensorOperator, TensorOperator]) -> None:
        a, b = pair
        da, db = dense_of(a), dense_of(b)
        assert np.allclose(dense_of(commutator(a, b)), da @ db - db @ da, atol=1e-9)

    @given(tensor_pairs())
    def test_product_and_sum(self, pair: tuple[TensorOperator, TensorOperator]) -> None:
        a, b = pair
        da, db = dense_of(a), dense_of(b)
        assert np.allclose(dense_of(a @ b), da @ db, atol=1e-9)
        assert np.allclose(dense_of(subtract(a, b)), da - db, atol=1e-9)
        assert np.allclose(dense_of(adjoint(a)), da.conj().T)

    @given(tensor_pairs())
    def test_frobenius_inner(self, pair: tuple[TensorOperator, TensorOperator]) -> None:
        """Test tr(a†b) and its conjugate symmetry."""
        a, b = pair
        dense = np.trace(dense_of(a).conj().T @ dense_of(b))
        scale = max(1.0, abs(dense))
        assert abs(frobenius_inner(a, b) - dense) <= 1e-9 * scale
        assert abs(frobenius_inner(b, a) - np.conj(frobenius_inner(a, b))) <= 1e-9 * scale

    @given(tensor_pairs())
    def test_compress_preserves_operator(self, pair: tuple[TensorOperator, TensorOperator]) -> None:
        a, b = pair
        total = a + b + a
        assert np.allclose(dense_of(total.compress()), dense_of(total), atol=1e-9)

    @given(tensor_pairs())
    def test_traceless(self, pair: tuple[TensorOperator, TensorOperator]) -> None:
        a, _ = pair
        assert np.allclose(dense_of(a.traceless()), to_dense(traceless(to_dense(a))).matrix)

    def test_hermitian_commutator_norm_symmetry(self, rng: np.random.Generator) -> None:
        """Test ‖[H, X]‖ = ‖[H, X†]‖ for Hermitian H."""
        n = 3
        raw = rng.normal(size=(4, n, 2, 2)) + 1j * rng.normal(size=(4, n, 2, 2))
        x = TensorOperator(n, rng.normal(size=4), raw)
        h_raw = TensorOperator(n, rng.normal(size=4), rng.normal(size=(4, n, 2, 2)))
        h = h_raw + h_raw.adjoint()
        assert is_hermitian(h)
        left = frobenius_norm_sq(commutator(h, x))
        right = frobenius_norm_sq(commutator(h, x.adjoint()))
        assert left == pytest.approx(right, rel=1e-10)
