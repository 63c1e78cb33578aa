"""Pytest configuration for integration tests."""

from collections.abc import Iterator

import pytest

from asymmetry_cli.config import settings
from asymmetry_cli.registry import BuiltModel, build_model

# (model, gamma, options) covering every dense-capable model and both chain backends.
PROPERTY_MODELS = [
    ("fock", 0.8, {"M": 3}),
    ("casimir", 1.1, {"pauli": "half"}),
    ("casimir", -0.6, {"pauli": "full"}),
    ("chain", 0.6, {"N": 4}),
    ("chain", 1.4, {"N": 5, "pauli": "half", "bonds": "periodic", "boundary": "as-written"}),
    ("chain", 0.9, {"N": 14, "backend": "tensor"}),
]


@pytest.fixture(
    params=PROPERTY_MODELS,
    ids=[f"{model}-{gamma:g}-{len(options)}" for model, gamma, options in PROPERTY_MODELS],
)
def built_model(request: pytest.FixtureRequest) -> BuiltModel:
    """One instance of each built-in model."""
    model, gamma, options = request.param
    return build_model(model, gamma, **options)


@pytest.fixture(autouse=True)
def reset_settings() -> Iterator[None]:
    """Undo any change a test makes to the shared settings."""
    saved = (settings.scalar_eps, settings.symmetry_tol, settings.threads)
    yield
    settings.scalar_eps, settings.symmetry_tol, settings.threads = saved
