"""Tests for the asymmetry degree and its invariance checks."""

import math

import numpy as np
import pytest

from asymmetry_cli.asymmetry import (
    GeneratorSet,
    NumericalRangeError,
    PreconditionError,
    ScalarOperatorError,
    SingularTransformError,
    asymmetry,
    casimir_exponential,
    check_shift_invariance,
    check_unitary_invariance,
    commutator_norm_sq,
    explore_monotonicity,
    is_symmetric,
)
from asymmetry_cli.models import (
    FockSubspaceSpec,
    coproduct_su2,
    fock_qhamiltonian,
    fock_su2_generators,
    su2_casimir,
)
from asymmetry_cli.operators import (
    DenseOperator,
    DimensionMismatchError,
    TensorOperator,
    spin,
)


def random_hermitian(rng: np.random.Generator, dim: int) -> DenseOperator:
    raw = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return DenseOperator(raw + raw.conj().T)


@pytest.fixture
def pair() -> GeneratorSet:
    return coproduct_su2("half")


class TestGeneratorSet:
    """Tests for the generator container."""

    def test_labels_and_lookup(self, pair: GeneratorSet) -> None:
        assert pair.labels == ("J+", "J-", "J3")
        assert len(pair) == 3
        assert pair.dim == 4
        assert pair.backend == "dense"
        with pytest.raises(KeyError, match="J1"):
            pair.operator("J1")

    def test_rejects_empty(self) -> None:
        with pytest.raises(ValueError, match="empty"):
            GeneratorSet("nothing", ())

    def test_rejects_mixed_dimensions(self) -> None:
        with pytest.raises(DimensionMismatchError):
            GeneratorSet(
                "mixed",
                (("A", DenseOperator.identity(2)), ("B", DenseOperator.identity(4))),
            )

    def test_to_backend(self) -> None:
        """Test tensor sets densify and dense sets refuse the reverse."""
        tensor = GeneratorSet("z", (("Z", TensorOperator.local(2, {0: spin("z")})),))
        dense = tensor.to_backend("dense")
        assert dense.backend == "dense"
        assert dense.dim == 4
        with pytest.raises(ValueError, match="tensor"):
            dense.to_backend("tensor")


class TestAsymmetry:
    """Tests for A(g, h)."""

    def test_fock_two_excitations(self) -> None:
        """Test M=2 gives exactly 12 for any nonzero γ."""
        spec = FockSubspaceSpec(2)
        g = fock_su2_generators(spec)
        for gamma in (-2.0, 0.3, 1.0):
            report = asymmetry(g, fock_qhamiltonian(spec, gamma))
            assert report.total == pytest.approx(12.0, rel=1e-10)
            assert dict(report.per_generator)["J3"] == pytest.approx(0.0, abs=1e-20)

    def test_scalar_operator_raises(self) -> None:
        """Test the undeformed Fock Hamiltonian is scalar on the subspace."""
        spec = FockSubspaceSpec(3)
        with pytest.raises(ScalarOperatorError, match="identity"):
            asymmetry(fock_su2_generators(spec), fock_qhamiltonian(spec, 0.0))

    def test_single_excitation_is_always_scalar(self) -> None:
        spec = FockSubspaceSpec(1)
        with pytest.raises(ScalarOperatorError):
            asymmetry(fock_su2_generators(spec), fock_qhamiltonian(spec, 1.5))

    @pytest.mark.filterwarnings("ignore::RuntimeWarning")
    def test_norm_overflow_raises(self) -> None:
        """Test [3]_q overflows at γ = 300 and is reported, not returned as nan."""
        spec = FockSubspaceSpec(3)
        with pytest.raises(NumericalRangeError, match="double range"):
            asymmetry(fock_su2_generators(spec), fock_qhamiltonian(spec, 300.0))

    def test_large_gamma_stays_finite(self) -> None:
        spec = FockSubspaceSpec(2)
        report = asymmetry(fock_su2_generators(spec), fock_qhamiltonian(spec, 300.0))
        assert math.isfinite(report.total)

    def test_scalar_eps_override(self, pair: GeneratorSet) -> None:
        """Test a large threshold turns an ordinary operator into a scalar one."""
        h = DenseOperator(np.kron(spin("z").entries, np.eye(2)))
        with pytest.raises(ScalarOperatorError):
            asymmetry(pair, h, scalar_eps=10.0)

    def test_zero_for_casimir(self, pair: GeneratorSet) -> None:
        """Test the Casimir commutes with its own generators."""
        report = asymmetry(pair, su2_casimir(pair))
        assert report.total == pytest.approx(0.0, abs=1e-24)
        assert is_symmetric(pair, su2_casimir(pair)).symmetric

    def test_positive_for_non_commuting(self, pair: GeneratorSet) -> None:
        h = DenseOperator(np.kron(spin("z").entries, np.eye(2)))
        check = is_symmetric(pair, h)
        assert not check.symmetric
        assert check.max_norm > 0.1
        assert asymmetry(pair, h).total > 0

    def test_non_hermitian_flag(self, pair: GeneratorSet) -> None:
        """Test non-Hermitian operators are evaluated but flagged."""
        report = asymmetry(pair, pair.operator("J+"))
        assert report.non_hermitian
        assert math.isfinite(report.total)

    def test_dimension_mismatch(self, pair: GeneratorSet) -> None:
        with pytest.raises(DimensionMismatchError):
            asymmetry(pair, DenseOperator.identity(3))

    def test_report_dict(self, pair: GeneratorSet) -> None:
        h = DenseOperator(np.kron(spin("x").entries, np.eye(2)))
        payload = asymmetry(pair, h, model_params={"pauli": "half"}).to_dict()
        assert set(payload) == {
            "value",
            "per_generator",
            "norm_sq_traceless",
            "backend",
            "params",
            "non_hermitian",
        }
        assert payload["params"] == {"pauli": "half"}
        assert set(payload["per_generator"]) == {"J+", "J-", "J3"}

    def test_commutator_norm_sq(self) -> None:
        """Test ‖[σ+, σ-]‖² = ‖2σz‖² = 2 in the half convention."""
        plus = DenseOperator(spin("+").entries)
        minus = DenseOperator(spin("-").entries)
        assert commutator_norm_sq(plus, minus) == pytest.approx(2.0)


class TestInvariances:
    """Tests for shift and unitary invariance, and general similarity transforms."""

    def test_shift_invariance(self, pair: GeneratorSet, rng: np.random.Generator) -> None:
        h = random_hermitian(rng, 4)
        assert check_shift_invariance(pair, h, [-10.0, 0.5, 1e3])

    def test_shift_invariance_fock(self) -> None:
        spec = FockSubspaceSpec(4)
        h = fock_qhamiltonian(spec, 0.8)
        assert check_shift_invariance(fock_su2_generators(spec), h, [-3.0, 7.0])

    def test_unitary_invariance(self, pair: GeneratorSet, rng: np.random.Generator) -> None:
        """Test conjugation by exp(iθJ²) leaves A unchanged."""
        t = casimir_exponential(su2_casimir(pair), 0.7j)
        assert np.allclose(t.matrix @ t.matrix.conj().T, np.eye(4))
        assert check_unitary_invariance(pair, random_hermitian(rng, 4), t)

    def test_unitary_must_commute(self, pair: GeneratorSet, rng: np.random.Generator) -> None:
        t = DenseOperator(np.kron(spin("z", "full").entries, np.eye(2)))
        with pytest.raises(PreconditionError, match="commute"):
            check_unitary_invariance(pair, random_hermitian(rng, 4), t)

    def test_unitary_must_be_unitary(self, pair: GeneratorSet, rng: np.random.Generator) -> None:
        with pytest.raises(PreconditionError, match="unitary"):
            check_unitary_invariance(pair, random_hermitian(rng, 4), DenseOperator.identity(4) * 2)

    def test_similarity_positive_transform(
        self, pair: GeneratorSet, rng: np.random.Generator
    ) -> None:
        """Test a positive commuting transform returns a finite difference."""
        t = casimir_exponential(su2_casimir(pair), 0.3)
        delta = explore_monotonicity(pair, random_hermitian(rng, 4), t)
        assert math.isfinite(delta)

    def test_similarity_unitary_is_zero(
        self, pair: GeneratorSet, rng: np.random.Generator
    ) -> None:
        t = casimir_exponential(su2_casimir(pair), 1.1j)
        delta = explore_monotonicity(pair, random_hermitian(rng, 4), t)
        assert delta == pytest.approx(0.0, abs=1e-10)

    def test_similarity_scalar_transform_is_zero(
        self, pair: GeneratorSet, rng: np.random.Generator
    ) -> None:
        """Test t = 2I leaves the asymmetry degree unchanged."""
        t = DenseOperator.identity(4).scale(2.0)
        delta = explore_monotonicity(pair, random_hermitian(rng, 4), t)
        assert delta == pytest.approx(0.0, abs=1e-12)

    def test_similarity_singular(self, pair: GeneratorSet, rng: np.random.Generator) -> None:
        with pytest.raises(SingularTransformError):
            explore_monotonicity(pair, random_hermitian(rng, 4), DenseOperator.zeros(4))
