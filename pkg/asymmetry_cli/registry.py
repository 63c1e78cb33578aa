"""Built-in models: how each one is parameterized and constructed."""

from __future__ import annotations

import logging
import math
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Any, Literal

from asymmetry_cli.asymmetry import GeneratorSet, asymmetry
from asymmetry_cli.closed_forms import cf_chain
from asymmetry_cli.config import settings
from asymmetry_cli.models import (
    ChainSpec,
    DeformationParam,
    FockSubspaceSpec,
    chain_su2_generators,
    coproduct_su2,
    fock_qhamiltonian,
    fock_su2_generators,
    h_q,
    qcasimir_matrix,
)
from asymmetry_cli.operators import Operator, to_dense

logger = logging.getLogger(__name__)

BackendChoice = Literal["dense", "tensor", "auto"]

DEFAULT_PAULI = {"casimir": "half", "chain": "full", "chain-inf": "full"}


@dataclass(frozen=True)
class ModelInfo:
    """Entry in the `models` listing."""

    name: str
    parameter: str | None
    description: str


MODELS: Mapping[str, ModelInfo] = {
    "fock": ModelInfo(
        "fock",
        "M",
        "su(2) on the two-mode Fock subspace m1 + m2 = M; H' = [n1]_q + [n2]_q",
    ),
    "casimir": ModelInfo(
        "casimir",
        None,
        "two-spin co-product su(2) against the explicit 4x4 q-Casimir",
    ),
    "chain": ModelInfo(
        "chain",
        "N",
        "N-spin su(2) chain generators against the boundary-deformed XXZ Hamiltonian H_q",
    ),
    "chain-inf": ModelInfo(
        "chain-inf",
        None,
        "N -> infinity limit of the chain model (closed form only)",
    ),
}


@dataclass(frozen=True)
class BuiltModel:
    """Generators and operator of one model instance."""

    generators: GeneratorSet
    hamiltonian: Operator
    params: Mapping[str, Any] = field(default_factory=dict)

    @property
    def backend(self) -> str:
        """Backend of the generators and operator."""
        return self.generators.backend


def check_model(model: str) -> str:
    """Validate a model name.

    Raises:
        ValueError: If it is not a registered model.
    """
    if model not in MODELS:
        msg = f"Unknown model {model!r}; expected one of {tuple(MODELS)}"
        raise ValueError(msg)
    return model


def choose_backend(n_sites: int, backend: BackendChoice) -> str:
    """Resolve `auto`: dense when 2^N is at most `settings.auto_dense_limit`."""
    if backend != "auto":
        return backend
    return "dense" if 2**n_sites <= settings.auto_dense_limit else "tensor"


def build_model(
    model: str,
    gamma: float,
    *,
    M: int | None = None,  # noqa: N803
    N: int | None = None,  # noqa: N803
    pauli: str | None = None,
    bonds: str = "open",
    boundary: str = "mirrored",
    backend: BackendChoice = "auto",
) -> BuiltModel:
    """Construct the generators and Hamiltonian of a built-in model.

    Args:
        model: `fock`, `casimir` or `chain`.
        gamma: Deformation parameter.
        M: Excitation number (fock).
        N: Number of sites (chain).
        pauli: Pauli convention; defaults to `half` for casimir and `full` for chain.
        bonds: Bond convention (chain).
        boundary: Boundary sign convention (chain).
        backend: `dense`, `tensor` or `auto`. Only the chain has a tensor form.

    Raises:
        ValueError: For an out-of-range γ, missing parameters, the closed-form-only
            `chain-inf` model or a tensor request on a dense-only model.
    """
    check_model(model)
    DeformationParam(gamma)
    pauli = pauli or DEFAULT_PAULI.get(model, "half")
    if model == "fock":
        if M is None:
            msg = "The fock model needs --M"
            raise ValueError(msg)
        _require_dense(model, backend)
        spec = FockSubspaceSpec(M)
        return BuiltModel(
            fock_su2_generators(spec), fock_qhamiltonian(spec, gamma), {"M": M}
        )
    if model == "casimir":
        _require_dense(model, backend)
        return BuiltModel(coproduct_su2(pauli), qcasimir_matrix(gamma), {"pauli": pauli})
    if model == "chain":
        if N is None or math.isinf(N):
            msg = "The chain model needs a finite --N; use chain-inf for the limit"
            raise ValueError(msg)
        spec = ChainSpec(int(N), pauli, bonds, boundary)  # type: ignore[arg-type]
        generators = chain_su2_generators(spec)
        hamiltonian: Operator = h_q(spec, gamma)
        if choose_backend(spec.n_sites, backend) == "dense":
            generators = generators.to_backend("dense")
            hamiltonian = to_dense(hamiltonian)
        return BuiltModel(generators, hamiltonian, spec.to_dict())
    msg = "chain-inf has no operator form; evaluate it with cf_chain"
    raise ValueError(msg)


def _require_dense(model: str, backend: BackendChoice) -> None:
    if backend == "tensor":
        msg = f"The {model} model only has a dense form"
        raise ValueError(msg)


@dataclass(frozen=True)
class PointResult:
    """Asymmetry of one model at one γ."""

    value: float
    backend: str
    params: Mapping[str, Any]
    per_generator: Mapping[str, float] = field(default_factory=dict)
    norm_sq_traceless: float | None = None


def evaluate_point(
    model: str,
    gamma: float,
    *,
    variant: str = "corrected",
    **options: Any,
) -> PointResult:
    """Asymmetry of `model` at `gamma`; `chain-inf` comes from its closed form.

    Raises:
        ScalarOperatorError: When the model's operator is scalar at this γ.
        ValueError: For a γ outside the DeformationParam range.
    """
    if check_model(model) == "chain-inf":
        DeformationParam(gamma)
        pauli = options.get("pauli") or DEFAULT_PAULI["chain-inf"]
        bonds = options.get("bonds", "open")
        value = cf_chain(math.inf, gamma, variant, pauli=pauli, bonds=bonds)
        params = {"N": "inf", "pauli": pauli, "bonds": bonds, "variant": variant}
        return PointResult(value, "closed-form", params)
    built = build_model(model, gamma, **options)
    report = asymmetry(built.generators, built.hamiltonian, model_params=built.params)
    return PointResult(
        report.total,
        report.backend,
        built.params,
        dict(report.per_generator),
        report.norm_sq_traceless,
    )
