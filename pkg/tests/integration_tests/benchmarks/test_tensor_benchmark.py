"""Timing of the tensor backend on long chains."""

import time

import pytest

from asymmetry_cli.asymmetry import asymmetry
from asymmetry_cli.closed_forms import cf_chain
from asymmetry_cli.models import ChainSpec
from asymmetry_cli.registry import build_model


def timed_asymmetry(n: int, gamma: float, **options: str) -> tuple[float, float]:
    start = time.perf_counter()
    built = build_model("chain", gamma, N=n, backend="tensor", **options)
    value = asymmetry(built.generators, built.hamiltonian).total
    return value, time.perf_counter() - start


@pytest.mark.timeout(30)
def test_hundred_sites_under_ten_seconds() -> None:
    value, elapsed = timed_asymmetry(100, 1.0)
    assert elapsed < 10.0
    assert value == pytest.approx(cf_chain(100, 1.0), rel=1e-10)


@pytest.mark.timeout(30)
@pytest.mark.parametrize("n", [10, 20, 40])
def test_periodic_half_chain_matches_closed_form(n: int) -> None:
    value, _ = timed_asymmetry(n, 0.7, pauli="half", bonds="periodic", boundary="as-written")
    expected = cf_chain(n, 0.7, pauli="half", bonds="periodic")
    assert value == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("n", [3, 6, 10])
def test_tensor_matches_dense(n: int) -> None:
    spec = ChainSpec.resolved(n)
    tensor, _ = timed_asymmetry(n, 2.0, pauli=spec.pauli, bonds=spec.bonds, boundary=spec.boundary)
    dense = build_model("chain", 2.0, backend="dense", **spec.to_dict())
    reference = asymmetry(dense.generators, dense.hamiltonian).total
    assert abs(tensor - reference) / reference < 1e-10
