"""N-spin chain generators and Hamiltonians on the tensor backend.

Sites are 0-based internally. Bonds are (j, j+1) for an open chain and additionally
(N−1, 0) for a periodic one.
"""

from __future__ import annotations

import functools
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Any, Literal, get_args

import numpy as np

from asymmetry_cli.asymmetry import GeneratorSet, is_symmetric
from asymmetry_cli.operators import (
    ConventionError,
    PauliConvention,
    SiteMatrix,
    TensorOperator,
    check_convention,
    convention_factor,
    q_power_sigma_z,
    spin,
)

logger = logging.getLogger(__name__)

BondConvention = Literal["open", "periodic"]
BoundaryConvention = Literal["as-written", "mirrored"]

BOND_CONVENTIONS: tuple[str, ...] = get_args(BondConvention)
BOUNDARY_CONVENTIONS: tuple[str, ...] = get_args(BoundaryConvention)

MAX_RESOLVE_SITES = 10


@dataclass(frozen=True)
class ChainSpec:
    """Chain length plus the conventions that fix the printed Hamiltonian.

    Attributes:
        n_sites: Number of spins N (at least 2).
        pauli: Spin-matrix normalization, `half` or `full`.
        bonds: `open` (N−1 bonds) or `periodic` (N bonds, site N+1 ≡ 1).
        boundary: Sign of the (σz_1 − σz_N) term, `as-written` (+) or `mirrored` (−).
    """

    n_sites: int
    pauli: PauliConvention = "full"
    bonds: BondConvention = "open"
    boundary: BoundaryConvention = "as-written"

    def __post_init__(self) -> None:
        if int(self.n_sites) != self.n_sites or self.n_sites < 2:
            msg = f"n_sites must be an integer >= 2, got {self.n_sites}"
            raise ValueError(msg)
        check_convention(self.pauli)
        if self.bonds not in BOND_CONVENTIONS:
            msg = f"Unknown bond convention {self.bonds!r}; expected one of {BOND_CONVENTIONS}"
            raise ConventionError(msg)
        if self.boundary not in BOUNDARY_CONVENTIONS:
            msg = (
                f"Unknown boundary convention {self.boundary!r}; "
                f"expected one of {BOUNDARY_CONVENTIONS}"
            )
            raise ConventionError(msg)

    @classmethod
    def resolved(cls, n_sites: int) -> ChainSpec:
        """The convention under which H_q commutes with the su_q(2) chain generators."""
        return cls(n_sites, pauli="full", bonds="open", boundary="mirrored")

    @property
    def structure_scale(self) -> float:
        """λ of the chain generators: ½ for half Pauli matrices, 1 for full ones."""
        return 0.5 * convention_factor(self.pauli)

    @property
    def boundary_sign(self) -> int:
        """+1 for the printed boundary term, −1 for the mirrored one."""
        return 1 if self.boundary == "as-written" else -1

    def bond_list(self) -> list[tuple[int, int]]:
        """0-based site pairs coupled by the bulk Hamiltonian."""
        n = self.n_sites
        pairs = [(j, j + 1) for j in range(n - 1)]
        if self.bonds == "periodic":
            pairs.append((n - 1, 0))
        return pairs

    def label(self) -> str:
        """Compact convention label, e.g. `full/open/mirrored`."""
        return f"{self.pauli}/{self.bonds}/{self.boundary}"

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready representation."""
        return {
            "N": self.n_sites,
            "pauli": self.pauli,
            "bonds": self.bonds,
            "boundary": self.boundary,
        }


def _site_sum(spec: ChainSpec, op: SiteMatrix, coeff: complex) -> TensorOperator:
    return TensorOperator.concatenate(
        TensorOperator.local(spec.n_sites, {j: op}, coeff) for j in range(spec.n_sites)
    )


def chain_su2_generators(spec: ChainSpec) -> GeneratorSet:
    """J± = ½ Σ_j σ±_j, J3 = ½ Σ_j σz_j."""
    return GeneratorSet(
        name=f"su2-chain-N{spec.n_sites}",
        generators=(
            ("J+", _site_sum(spec, spin("+", spec.pauli), 0.5)),
            ("J-", _site_sum(spec, spin("-", spec.pauli), 0.5)),
            ("J3", _site_sum(spec, spin("z", spec.pauli), 0.5)),
        ),
        structure_scale=spec.structure_scale,
    )


def _deformed_sum(spec: ChainSpec, op: SiteMatrix, gamma: float) -> TensorOperator:
    k_up = q_power_sigma_z(gamma, +1)
    k_down = q_power_sigma_z(gamma, -1)
    terms = []
    for j in range(spec.n_sites):
        ops = {i: (k_down if i < j else k_up) for i in range(spec.n_sites) if i != j}
        ops[j] = op
        terms.append(TensorOperator.local(spec.n_sites, ops, 0.5))
    return TensorOperator.concatenate(terms)


def chain_suq2_generators(spec: ChainSpec, gamma: float) -> GeneratorSet:
    """J′± = ½ Σ_j q^{−σz}⊗…⊗σ±_j⊗…⊗q^{σz}, J′3 = J3.

    Sites before j carry q^{−σz}, sites after j carry q^{σz}.
    """
    return GeneratorSet(
        name=f"suq2-chain-N{spec.n_sites}",
        generators=(
            ("J+", _deformed_sum(spec, spin("+", spec.pauli), gamma)),
            ("J-", _deformed_sum(spec, spin("-", spec.pauli), gamma)),
            ("J3", _site_sum(spec, spin("z", spec.pauli), 0.5)),
        ),
        gamma=gamma,
        structure_scale=spec.structure_scale,
        algebra="suq2",
    )


def _bond_terms(spec: ChainSpec, zz_coeff: float) -> list[TensorOperator]:
    terms = []
    for i, k in spec.bond_list():
        for axis, coeff in (("x", 1.0), ("y", 1.0), ("z", zz_coeff)):
            s = spin(axis, spec.pauli)
            terms.append(TensorOperator.local(spec.n_sites, {i: s, k: s}, coeff))
    return terms


def h_xxx(spec: ChainSpec) -> TensorOperator:
    """Σ_bonds σxσx + σyσy + σzσz."""
    return TensorOperator.concatenate(_bond_terms(spec, 1.0)).compress()


def h_q(spec: ChainSpec, gamma: float) -> TensorOperator:
    """Σ_bonds [σxσx + σyσy + (q+q⁻¹)/2 σzσz] ± (q−q⁻¹)/2 (σz_1 − σz_N).

    The boundary sign follows `spec.boundary`. At γ = 0 this is `h_xxx(spec)`.
    """
    z = spin("z", spec.pauli)
    boundary = spec.boundary_sign * math.sinh(gamma)
    terms = _bond_terms(spec, math.cosh(gamma))
    terms.append(TensorOperator.local(spec.n_sites, {0: z}, boundary))
    terms.append(TensorOperator.local(spec.n_sites, {spec.n_sites - 1: z}, -boundary))
    return TensorOperator.concatenate(terms).compress()


def hq_commutator_analytic(spec: ChainSpec, gamma: float) -> TensorOperator:
    """Closed expression for [H_q, J+] with the undeformed chain J+.

    [H_q, J+] = λ[(cosh γ − 1) Σ_bonds (σ+_i σz_k + σz_i σ+_k)
                  ± sinh γ (σ+_1 − σ+_N)].
    """
    plus = spin("+", spec.pauli)
    z = spin("z", spec.pauli)
    lam = spec.structure_scale
    bulk = lam * (math.cosh(gamma) - 1.0)
    edge = lam * spec.boundary_sign * math.sinh(gamma)
    terms = []
    for i, k in spec.bond_list():
        terms.append(TensorOperator.local(spec.n_sites, {i: plus, k: z}, bulk))
        terms.append(TensorOperator.local(spec.n_sites, {i: z, k: plus}, bulk))
    terms.append(TensorOperator.local(spec.n_sites, {0: plus}, edge))
    terms.append(TensorOperator.local(spec.n_sites, {spec.n_sites - 1: plus}, -edge))
    return TensorOperator.concatenate(terms).compress()


@dataclass(frozen=True)
class ConventionResolution:
    """Outcome of searching the convention grid for su_q(2) symmetry of H_q.

    Attributes:
        n_sites: Chain length searched.
        gamma: Deformation parameter.
        tol: Tolerance on max ‖[H_q, J′_α]‖.
        norms: (spec, max commutator norm) for every convention.
    """

    n_sites: int
    gamma: float
    tol: float
    norms: tuple[tuple[ChainSpec, float], ...]

    @property
    def symmetric(self) -> tuple[ChainSpec, ...]:
        """Conventions whose H_q commutes with the su_q(2) generators."""
        return tuple(spec for spec, norm in self.norms if norm <= self.tol)

    @property
    def printed_grid_symmetric(self) -> tuple[ChainSpec, ...]:
        """Symmetric conventions among those that keep the printed boundary sign."""
        return tuple(spec for spec in self.symmetric if spec.boundary == "as-written")

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready representation."""
        return {
            "N": self.n_sites,
            "gamma": self.gamma,
            "tol": self.tol,
            "norms": {spec.label(): norm for spec, norm in self.norms},
            "symmetric": [spec.label() for spec in self.symmetric],
        }


@functools.lru_cache(maxsize=64)
def resolve_convention(n_sites: int, gamma: float, tol: float = 1e-10) -> ConventionResolution:
    """Find every convention under which H_q is su_q(2)-symmetric.

    Searches {half, full} × {open, periodic} × {as-written, mirrored} on the dense
    backend and records the largest commutator norm of each.

    Raises:
        ValueError: If `n_sites` exceeds the dense-verifiable size.
    """
    if n_sites > MAX_RESOLVE_SITES:
        msg = f"resolve_convention is limited to N <= {MAX_RESOLVE_SITES}, got {n_sites}"
        raise ValueError(msg)
    norms = []
    for pauli, bonds, boundary in itertools.product(
        ("half", "full"), BOND_CONVENTIONS, BOUNDARY_CONVENTIONS
    ):
        spec = ChainSpec(n_sites, pauli, bonds, boundary)  # type: ignore[arg-type]
        generators = chain_suq2_generators(spec, gamma).to_backend("dense")
        check = is_symmetric(generators, h_q(spec, gamma).to_dense(), tol)
        norms.append((spec, check.max_norm))
        logger.debug("N=%d gamma=%g %s: %.3e", n_sites, gamma, spec.label(), check.max_norm)
    return ConventionResolution(n_sites, gamma, tol, tuple(norms))


def all_up_state(n_sites: int) -> np.ndarray:
    """|↑…↑⟩ as a vector in the 2^N basis."""
    state = np.zeros(2**n_sites, dtype=np.complex128)
    state[0] = 1.0
    return state
