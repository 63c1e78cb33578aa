"""End-to-end checks of the numerical claims the tool is built to reproduce."""

import math
import time
from functools import reduce
from pathlib import Path

import numpy as np
import pytest

from asymmetry_cli.asymmetry import (
    asymmetry,
    casimir_exponential,
    check_shift_invariance,
    check_unitary_invariance,
    commutator_norm_sq,
    is_symmetric,
)
from asymmetry_cli.closed_forms import cf_casimir, cf_chain, fit_grid, verify
from asymmetry_cli.commands.sweep import SweepJob, gamma_grid
from asymmetry_cli.geometry import SurfaceSpec, deformed_sphere_mesh
from asymmetry_cli.models import (
    ChainSpec,
    FockSubspaceSpec,
    chain_su2_generators,
    chain_suq2_generators,
    fock_qhamiltonian,
    fock_su2_generators,
    q_number,
    qcasimir_matrix,
    resolve_convention,
    su2_casimir,
)
from asymmetry_cli.operators import is_hermitian, spin, to_dense
from asymmetry_cli.registry import BuiltModel, build_model, evaluate_point
from asymmetry_cli.reports import read_sweep_csv, write_sweep_csv

GAMMA_BAND = list(fit_grid(12)) + [-g for g in fit_grid(12)]


def kron_chain(site_ops: list[np.ndarray]) -> np.ndarray:
    return reduce(np.kron, site_ops)


def dense_site_sum(n: int, op: np.ndarray, before: np.ndarray, after: np.ndarray) -> np.ndarray:
    """Σ_j before⊗…⊗op_j⊗…⊗after built with explicit Kronecker products."""
    total = np.zeros((2**n, 2**n), dtype=complex)
    for j in range(n):
        total += kron_chain([before] * j + [op] + [after] * (n - j - 1))
    return total


class TestCasimirCoproduct:
    """The two-spin q-Casimir against 16(cosh γ − 1)/(3 cosh γ)."""

    def test_grid_within_tolerance_and_fast(self) -> None:
        start = time.perf_counter()
        errors = [
            abs(evaluate_point("casimir", g).value - cf_casimir(g))
            for g in np.linspace(-5.0, 5.0, 101)
        ]
        elapsed = time.perf_counter() - start
        assert max(errors) < 1e-10
        assert elapsed < 1.0


class TestFockSubspace:
    """The q-deformed number Hamiltonian on m1 + m2 = M."""

    @pytest.mark.parametrize("gamma", GAMMA_BAND)
    def test_two_excitations_is_twelve(self, gamma: float) -> None:
        assert evaluate_point("fock", gamma, M=2).value == pytest.approx(12.0, abs=1e-9)

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
    def test_corrected_form_matches_oracle(self, m: int) -> None:
        report = verify("fock", {"M": m}, GAMMA_BAND, rel_tol=1e-9)
        assert report.passed

    def test_hamiltonian_conserves_j3(self) -> None:
        for m in (2, 5):
            spec = FockSubspaceSpec(m)
            h = fock_qhamiltonian(spec, 1.3)
            j3 = fock_su2_generators(spec).operator("J3")
            assert commutator_norm_sq(h, j3) < 1e-24


class TestChainSmallDeformation:
    """Continuity at γ → 0 for every chain length the dense backend handles."""

    @pytest.mark.parametrize("n", range(2, 9))
    def test_vanishes_with_gamma(self, n: int) -> None:
        assert evaluate_point("chain", 1e-4, N=n).value < 1e-7
        assert evaluate_point("chain", 0.0, N=n).value == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("n", [3, 6])
    def test_other_conventions_vanish_too(self, n: int) -> None:
        options = {"pauli": "half", "bonds": "periodic", "boundary": "as-written"}
        assert evaluate_point("chain", 1e-4, N=n, **options).value < 1e-7
        assert evaluate_point("chain", 0.0, N=n, **options).value == pytest.approx(0.0, abs=1e-12)


class TestConventionResolution:
    """A convention exists under which H_q commutes with the su_q(2) generators."""

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_resolved_convention_is_symmetric(self, n: int) -> None:
        resolution = resolve_convention(n, 0.7)
        assert ChainSpec.resolved(n) in resolution.symmetric
        norms = dict(resolution.norms)
        assert norms[ChainSpec.resolved(n)] < 1e-10

    def test_every_convention_symmetric_at_zero(self) -> None:
        resolution = resolve_convention(4, 0.0)
        assert len(resolution.symmetric) == len(resolution.norms) == 8


class TestChainClosedForm:
    """The corrected chain formula against the operator oracle."""

    @pytest.mark.parametrize("n", range(3, 9))
    def test_resolved_convention(self, n: int) -> None:
        report = verify("chain", ChainSpec.resolved(n).to_dict(), fit_grid(8), rel_tol=1e-9)
        assert report.passed

    @pytest.mark.parametrize("n", [3, 5, 8])
    def test_half_periodic(self, n: int) -> None:
        params = {"N": n, "pauli": "half", "bonds": "periodic", "boundary": "as-written"}
        assert verify("chain", params, fit_grid(8), rel_tol=1e-9).passed

    @pytest.mark.parametrize("pauli", ["full", "half"])
    def test_infinite_limit(self, pauli: str) -> None:
        for gamma in (0.25, 1.0, 3.0):
            limit = cf_chain(math.inf, gamma, pauli=pauli)
            assert limit == pytest.approx(cf_chain(10**4, gamma, pauli=pauli), abs=1e-3)


class TestAsymmetryProperties:
    """Invariances every asymmetry evaluation must respect."""

    def test_shift_invariance(self, built_model: BuiltModel) -> None:
        assert check_shift_invariance(
            built_model.generators, built_model.hamiltonian, [-3.0, 1.0, 7.5], tol=1e-10
        )

    def test_unitary_invariance(self, built_model: BuiltModel) -> None:
        if built_model.backend != "dense":
            pytest.skip("conjugation by exp(iθC) needs the dense form")
        casimir = su2_casimir(built_model.generators)
        for theta in (0.3, 2.1):
            t = casimir_exponential(casimir, 1j * theta)
            assert check_unitary_invariance(
                built_model.generators, built_model.hamiltonian, t, tol=1e-9
            )

    def test_per_generator_sum(self, built_model: BuiltModel) -> None:
        report = asymmetry(built_model.generators, built_model.hamiltonian)
        parts = sum(value for _, value in report.per_generator)
        assert report.total * report.norm_sq_traceless == pytest.approx(parts, rel=1e-12)
        assert all(value >= 0 for _, value in report.per_generator)
        assert report.total >= 0

    def test_small_asymmetry_bounds_commutators(self, built_model: BuiltModel) -> None:
        """Test max_j ‖[h, X_j]‖ ≤ √A·‖h̃‖."""
        report = asymmetry(built_model.generators, built_model.hamiltonian)
        tol = math.sqrt(report.total) * (1 + 1e-9) + 1e-12
        bound = tol * math.sqrt(report.norm_sq_traceless)
        assert is_symmetric(built_model.generators, built_model.hamiltonian, bound).symmetric

    def test_hamiltonian_is_hermitian(self, built_model: BuiltModel) -> None:
        assert is_hermitian(built_model.hamiltonian)

    @pytest.mark.parametrize(
        ("model", "options"),
        [
            ("fock", {"M": 4}),
            ("casimir", {}),
            ("chain", {"N": 5}),
            ("chain", {"N": 4, "pauli": "half", "bonds": "periodic"}),
            ("chain-inf", {}),
        ],
    )
    def test_even_in_gamma(self, model: str, options: dict) -> None:
        for gamma in np.linspace(0.25, 5.0, 20):
            left = evaluate_point(model, -gamma, **options).value
            right = evaluate_point(model, gamma, **options).value
            assert left == pytest.approx(right, rel=1e-9), gamma

    def test_q_number_is_odd(self) -> None:
        x = np.linspace(-4.0, 4.0, 17)
        for gamma in (-1.2, 0.0, 0.5, 2.0):
            assert np.allclose(q_number(-x, gamma), -q_number(x, gamma), atol=1e-12)

    def test_casimir_matrix_is_hermitian(self) -> None:
        for gamma in (-2.0, 0.0, 3.0):
            assert is_hermitian(qcasimir_matrix(gamma))


class TestTensorBackend:
    """Tensor-term chains against dense Kronecker constructions."""

    @pytest.mark.parametrize("n", range(2, 7))
    @pytest.mark.parametrize("pauli", ["half", "full"])
    def test_su2_generators_match_kron(self, n: int, pauli: str) -> None:
        spec = ChainSpec(n, pauli)
        generators = chain_su2_generators(spec)
        eye = np.eye(2)
        for label, axis in (("J+", "+"), ("J-", "-"), ("J3", "z")):
            expected = 0.5 * dense_site_sum(n, spin(axis, pauli).entries, eye, eye)
            assert np.allclose(to_dense(generators.operator(label)).matrix, expected, atol=1e-12)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_suq2_generators_match_kron(self, n: int) -> None:
        gamma = 0.8
        spec = ChainSpec(n, "full")
        generators = chain_suq2_generators(spec, gamma)
        k_up = np.diag([np.exp(gamma / 2), np.exp(-gamma / 2)])
        k_down = np.linalg.inv(k_up)
        expected = 0.5 * dense_site_sum(n, spin("+", "full").entries, k_down, k_up)
        assert np.allclose(to_dense(generators.operator("J+")).matrix, expected, atol=1e-12)

    @pytest.mark.parametrize("n", [2, 4, 7, 10])
    def test_asymmetry_matches_dense(self, n: int) -> None:
        options = ChainSpec.resolved(n).to_dict()
        tensor = build_model("chain", 1.3, backend="tensor", **options)
        dense = build_model("chain", 1.3, backend="dense", **options)
        a_tensor = asymmetry(tensor.generators, tensor.hamiltonian).total
        a_dense = asymmetry(dense.generators, dense.hamiltonian).total
        assert abs(a_tensor - a_dense) / a_dense < 1e-10


class TestDeformedSphereMesh:
    """Meshes of x² + y² + sinh²(γz)/(γ sinh γ) = r²."""

    @pytest.mark.parametrize("gamma", [0.0, 1.0, 2.0, 5.0])
    @pytest.mark.parametrize("radius", [1.0, 2.5])
    def test_mesh_quality(self, gamma: float, radius: float) -> None:
        spec = SurfaceSpec(gamma, radius=radius, n_z=41, n_phi=24)
        mesh = deformed_sphere_mesh(spec)
        assert mesh.max_residual(spec) < 1e-8 * radius**2
        assert mesh.is_watertight()
        mirrored = mesh.vertices * np.array([1.0, 1.0, -1.0])
        original = {tuple(np.round(v, 9)) for v in mesh.vertices}
        assert {tuple(np.round(v, 9)) for v in mirrored} == original

    def test_small_gamma_reduces_to_sphere(self) -> None:
        spec = SurfaceSpec(1e-9, n_z=21, n_phi=12)
        vertices = deformed_sphere_mesh(spec).vertices
        radii = np.linalg.norm(vertices, axis=1)
        assert np.allclose(radii, 1.0, atol=1e-10)


class TestChainSweep:
    """A sweep across N ∈ {3, 50, ∞} written to CSV and read back."""

    @pytest.mark.timeout(120)
    def test_sweep_shape(self, tmp_path: Path) -> None:
        job = SweepJob("chain", gamma_grid(-3.0, 3.0, 13), sizes=(3, 50, math.inf))
        path = tmp_path / "sweep.csv"
        write_sweep_csv(job.run(), path)
        rows = read_sweep_csv(path)
        assert len(rows) == 3 * 13

        for param in ("3", "50", "inf"):
            values = [row.asymmetry for row in rows if row.param == param]
            assert values == pytest.approx(values[::-1], rel=1e-10)
            assert values[6] == pytest.approx(0.0, abs=1e-12)
            right = values[6:]
            assert all(b > a for a, b in zip(right, right[1:], strict=False))
            assert max(values) < 8.0
            # steps of 0.5: growth between 2.5 and 3 is below growth between 1 and 1.5
            assert right[6] - right[5] < right[3] - right[2]

        backends = {row.param: row.backend for row in rows}
        assert backends == {"3": "dense", "50": "tensor", "inf": "closed-form"}
