"""Closed-form asymmetry expressions and their comparison with the matrix oracle.

Each model has an `as-written` variant, evaluated exactly as the expression is
usually quoted, and a `corrected` variant that agrees with direct computation.
`verify` evaluates both against `asymmetry(...)` on a γ grid and records where
they disagree; as-written deviations are reported, never patched.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any, Literal, get_args

import numpy as np

from asymmetry_cli.asymmetry import asymmetry
from asymmetry_cli.models.qnumber import q_number
from asymmetry_cli.operators import check_convention

logger = logging.getLogger(__name__)

Variant = Literal["as-written", "corrected"]
ClosedFormModel = Literal["fock", "casimir", "chain"]

VARIANTS: tuple[str, ...] = get_args(Variant)
CLOSED_FORM_MODELS: tuple[str, ...] = get_args(ClosedFormModel)

DEFAULT_REL_TOL = 1e-9


@dataclass(frozen=True)
class ClosedFormVariant:
    """Which expression was evaluated and what was changed relative to the quoted one."""

    model: ClosedFormModel
    variant: Variant
    corrections: tuple[str, ...] = ()

    @property
    def label(self) -> str:
        """`model/variant`, carried into every report."""
        return f"{self.model}/{self.variant}"


CLOSED_FORM_VARIANTS: Mapping[tuple[str, str], ClosedFormVariant] = {
    ("fock", "as-written"): ClosedFormVariant("fock", "as-written"),
    ("fock", "corrected"): ClosedFormVariant(
        "fock",
        "corrected",
        (
            "denominator cosh^2(gamma/2) instead of cosh^2(gamma)",
            "norm sum R includes the j = 0 state",
        ),
    ),
    ("casimir", "as-written"): ClosedFormVariant("casimir", "as-written"),
    ("casimir", "corrected"): ClosedFormVariant("casimir", "corrected"),
    ("chain", "as-written"): ClosedFormVariant("chain", "as-written"),
    ("chain", "corrected"): ClosedFormVariant(
        "chain",
        "corrected",
        (
            "normalization follows the Pauli convention",
            "bond count n_b follows the bond convention",
        ),
    ),
}


def normalize_variant(variant: str) -> Variant:
    """Accept `as-written`, `as_written` or `corrected`.

    Raises:
        ValueError: For any other name.
    """
    name = variant.replace("_", "-")
    if name not in VARIANTS:
        msg = f"Unknown variant {variant!r}; expected one of {VARIANTS}"
        raise ValueError(msg)
    return name  # type: ignore[return-value]


def closed_form_variant(model: str, variant: str) -> ClosedFormVariant:
    """Look up the variant record for a model."""
    key = (model, normalize_variant(variant))
    if key not in CLOSED_FORM_VARIANTS:
        msg = f"No closed form for model {model!r}; expected one of {CLOSED_FORM_MODELS}"
        raise ValueError(msg)
    return CLOSED_FORM_VARIANTS[key]


def cf_fock(M: int, gamma: float, variant: str = "corrected") -> float:  # noqa: N803
    """Closed form for the Fock-subspace model.

    (2/R) Σ_{j=1}^{M} j(M+1−j) (cosh γ(M−j+½) − cosh γ(j−½))² / D

    as-written: D = cosh²γ, R = Σ_{j=1}^{M} ([j]+[M−j])² − 4(Σ_{j=1}^{M} [j])²/(M+1).
    corrected: D = cosh²(γ/2) and R sums from j = 0. For M = 2 this is 12 for every γ ≠ 0.

    Raises:
        ValueError: If M < 2 (the Hamiltonian is scalar at M = 1) or γ = 0.
    """
    name = normalize_variant(variant)
    if int(M) != M or M < 2:
        msg = f"cf_fock needs M >= 2, got {M}"
        raise ValueError(msg)
    if gamma == 0:
        msg = "cf_fock is undefined at gamma = 0"
        raise ValueError(msg)

    j = np.arange(1, M + 1, dtype=float)
    half_angle = gamma / 2 if name == "corrected" else gamma
    steps = (np.cosh(gamma * (M - j + 0.5)) - np.cosh(gamma * (j - 0.5))) ** 2
    numerator = float(np.sum(j * (M + 1 - j) * steps)) / math.cosh(half_angle) ** 2

    start = 0 if name == "corrected" else 1
    k = np.arange(start, M + 1, dtype=float)
    levels = q_number(k, gamma) + q_number(M - k, gamma)
    r = float(np.sum(levels**2)) - 4.0 * float(np.sum(q_number(j, gamma))) ** 2 / (M + 1)
    if r == 0:
        return math.inf
    return 2.0 * numerator / r


def cf_casimir(gamma: float) -> float:
    """16(cosh γ − 1)/(3 cosh γ); tends to 16/3 as |γ| → ∞."""
    try:
        c = math.cosh(gamma)
    except OverflowError:
        return 16.0 / 3.0
    return 16.0 * (c - 1.0) / (3.0 * c)


def bond_count(n_sites: float, bonds: str) -> float:
    """Effective number of bonds entering the chain norms.

    Open chains have N − 1. Periodic chains have N, except N = 2 where the two bonds
    coincide, so the doubled bond weighs 4.
    """
    if math.isinf(n_sites):
        return math.inf
    if bonds == "open":
        return n_sites - 1
    if bonds == "periodic":
        return 4.0 if n_sites == 2 else float(n_sites)  # noqa: PLR2004
    msg = f"Unknown bond convention {bonds!r}"
    raise ValueError(msg)


def cf_chain(
    N: float,  # noqa: N803
    gamma: float,
    variant: str = "corrected",
    *,
    pauli: str = "full",
    bonds: str = "open",
) -> float:
    """Closed form for the chain model, N ≥ 2 or `math.inf`.

    as-written: [N(c−1)² + 4s²]/[N(2+c²) + 8s²], limit (c−1)²/(c²+2).
    corrected: 8[n_b(c−1)² + s²]/[n_b(2+c²) + 2s²] for full Pauli matrices and
    2[n_b(c−1)² + 4s²]/[n_b(2+c²) + 8s²] for half ones, with n_b from `bond_count`.
    Here c = cosh γ and s = sinh γ. The boundary sign does not enter.
    """
    name = normalize_variant(variant)
    if not math.isinf(N) and (int(N) != N or N < 2):  # noqa: PLR2004
        msg = f"cf_chain needs N >= 2 or inf, got {N}"
        raise ValueError(msg)
    c = math.cosh(gamma)
    s2 = math.sinh(gamma) ** 2
    if name == "as-written":
        if math.isinf(N):
            return (c - 1.0) ** 2 / (c**2 + 2.0)
        return (N * (c - 1.0) ** 2 + 4.0 * s2) / (N * (2.0 + c**2) + 8.0 * s2)

    scale, edge = (8.0, 1.0) if check_convention(pauli) == "full" else (2.0, 4.0)
    n_b = bond_count(N, bonds)
    if math.isinf(n_b):
        return scale * (c - 1.0) ** 2 / (2.0 + c**2)
    return scale * (n_b * (c - 1.0) ** 2 + edge * s2) / (n_b * (2.0 + c**2) + 2.0 * edge * s2)


def closed_form(model: str, params: Mapping[str, Any], gamma: float, variant: str) -> float:
    """Dispatch to the closed form of `model` with its parameters."""
    if model == "fock":
        return cf_fock(int(params["M"]), gamma, variant)
    if model == "casimir":
        normalize_variant(variant)
        return cf_casimir(gamma)
    if model == "chain":
        return cf_chain(
            params["N"],
            gamma,
            variant,
            pauli=params.get("pauli", "full"),
            bonds=params.get("bonds", "open"),
        )
    msg = f"No closed form for model {model!r}; expected one of {CLOSED_FORM_MODELS}"
    raise ValueError(msg)


def fit_constant_ratio(
    oracle: Sequence[float] | np.ndarray, closed: Sequence[float] | np.ndarray
) -> tuple[float, float]:
    """Least-squares k with oracle ≈ k·closed.

    Returns:
        (k, ‖o − k f‖/‖o‖); both are nan when the fit is undefined.
    """
    o = np.asarray(oracle, dtype=float)
    f = np.asarray(closed, dtype=float)
    mask = np.isfinite(o) & np.isfinite(f)
    o, f = o[mask], f[mask]
    denominator = float(f @ f)
    if denominator == 0 or not o.size:
        return math.nan, math.nan
    k = float(o @ f) / denominator
    norm = float(np.linalg.norm(o))
    residual = float(np.linalg.norm(o - k * f)) / norm if norm > 0 else 0.0
    return k, residual


@dataclass(frozen=True)
class VariantComparison:
    """One closed-form variant evaluated on the grid next to the oracle."""

    variant: ClosedFormVariant
    values: tuple[float, ...]
    max_abs_error: float
    fit_ratio: float
    fit_residual: float
    all_finite: bool

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready representation."""
        return {
            "variant": self.variant.label,
            "corrections": list(self.variant.corrections),
            "values": list(self.values),
            "max_abs_error": self.max_abs_error,
            "fit_ratio": self.fit_ratio,
            "fit_residual": self.fit_residual,
            "all_finite": self.all_finite,
        }


@dataclass(frozen=True)
class DiscrepancyReport:
    """Oracle values and both closed-form variants on a shared γ grid.

    `passed` reflects only the corrected variant: every point must satisfy
    |oracle − cf| ≤ rel_tol · max(|oracle|, 1).
    """

    model: str
    params: Mapping[str, Any]
    gammas: tuple[float, ...]
    oracle: tuple[float, ...]
    comparisons: tuple[VariantComparison, ...]
    rel_tol: float
    passed: bool
    metadata: Mapping[str, Any] = field(default_factory=dict)

    def comparison(self, variant: str) -> VariantComparison:
        """The comparison for `variant`."""
        name = normalize_variant(variant)
        for item in self.comparisons:
            if item.variant.variant == name:
                return item
        msg = f"No {name!r} comparison in report for {self.model!r}"
        raise KeyError(msg)

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready representation."""
        return {
            "model": self.model,
            "params": dict(self.params),
            "gammas": list(self.gammas),
            "oracle": list(self.oracle),
            "variants": {c.variant.variant: c.to_dict() for c in self.comparisons},
            "rel_tol": self.rel_tol,
            "passed": self.passed,
            **({"metadata": dict(self.metadata)} if self.metadata else {}),
        }


def oracle_value(model: str, params: Mapping[str, Any], gamma: float) -> float:
    """Dense asymmetry of `model` at γ.

    Raises:
        ScalarOperatorError: For the Fock model at γ = 0.
    """
    from asymmetry_cli.registry import build_model

    built = build_model(model, gamma, backend="dense", **params)
    return asymmetry(built.generators, built.hamiltonian).total


def verify(
    model: str,
    params: Mapping[str, Any],
    gammas: Iterable[float],
    *,
    rel_tol: float = DEFAULT_REL_TOL,
) -> DiscrepancyReport:
    """Compare both closed-form variants of `model` with the dense oracle.

    Args:
        model: `fock`, `casimir` or `chain`.
        params: Model parameters (`M`; or `N`, `pauli`, `bonds`, `boundary`).
        gammas: Grid of deformation parameters.
        rel_tol: Tolerance for the corrected variant.

    Raises:
        ScalarOperatorError: Propagated from the oracle (Fock model at γ = 0).
    """
    grid = tuple(float(g) for g in gammas)
    oracle = np.array([oracle_value(model, params, g) for g in grid])
    comparisons = []
    passed = True
    for name in VARIANTS:
        values = np.array([closed_form(model, params, g, name) for g in grid])
        finite = bool(np.all(np.isfinite(values)))
        errors = np.abs(oracle - values)
        ratio, residual = fit_constant_ratio(oracle, values)
        comparisons.append(
            VariantComparison(
                variant=closed_form_variant(model, name),
                values=tuple(values.tolist()),
                max_abs_error=float(np.max(errors)) if grid else 0.0,
                fit_ratio=ratio,
                fit_residual=residual,
                all_finite=finite,
            )
        )
        if name == "corrected":
            passed = finite and bool(np.all(errors <= rel_tol * np.maximum(np.abs(oracle), 1.0)))
    logger.debug("verify %s %s: passed=%s", model, dict(params), passed)
    return DiscrepancyReport(
        model=model,
        params=dict(params),
        gammas=grid,
        oracle=tuple(oracle.tolist()),
        comparisons=tuple(comparisons),
        rel_tol=rel_tol,
        passed=passed,
    )


@dataclass(frozen=True)
class VerificationCase:
    """One entry of a verification suite."""

    model: str
    params: Mapping[str, Any]
    gammas: tuple[float, ...]

    def run(self, rel_tol: float = DEFAULT_REL_TOL) -> DiscrepancyReport:
        """Evaluate this case with `verify`."""
        return verify(self.model, self.params, self.gammas, rel_tol=rel_tol)


def fit_grid(points: int = 20) -> tuple[float, ...]:
    """Evenly spaced γ in [0.25, 3]."""
    return tuple(np.linspace(0.25, 3.0, points).tolist())


def default_verification_suite() -> list[VerificationCase]:
    """The cases `asymmetry verify` runs.

    Casimir on 101 points in [−5, 5]; Fock M = 2..6 on ±[0.25, 3]; chain N = 3..6
    under full/open/mirrored and under half/periodic.
    """
    positive = fit_grid()
    symmetric = tuple(-g for g in reversed(positive)) + positive
    cases = [VerificationCase("casimir", {}, tuple(np.linspace(-5.0, 5.0, 101).tolist()))]
    cases.extend(VerificationCase("fock", {"M": m}, symmetric) for m in range(2, 7))
    conventions = (("full", "open", "mirrored"), ("half", "periodic", "as-written"))
    for pauli, bonds, boundary in conventions:
        cases.extend(
            VerificationCase(
                "chain", {"N": n, "pauli": pauli, "bonds": bonds, "boundary": boundary}, positive
            )
            for n in range(3, 7)
        )
    return cases
