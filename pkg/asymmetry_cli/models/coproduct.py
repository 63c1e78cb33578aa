"""Two-spin co-product representations of su(2) and su_q(2), and their Casimirs.

Basis order is |↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩ (standard Kronecker layout,
first site most significant).
"""

from __future__ import annotations

import math

import numpy as np

from asymmetry_cli.asymmetry import GeneratorSet
from asymmetry_cli.config import SMALL_GAMMA
from asymmetry_cli.models.qnumber import q_number
from asymmetry_cli.operators import (
    DenseOperator,
    PauliConvention,
    SiteMatrix,
    commutator,
    convention_factor,
    frobenius_norm_sq,
    q_power_sigma_z,
    spin,
)

# Slot order of the printed q-Casimir matrix, as indices into the library basis:
# |↑↑⟩, |↓↑⟩, |↑↓⟩, |↓↓⟩.
PRINTED_CASIMIR_ORDER = (0, 2, 1, 3)
_CASIMIR_ORDERINGS = (PRINTED_CASIMIR_ORDER, (0, 1, 2, 3))
_COMMUTATION_TOL = 1e-10


def _dense(site: SiteMatrix) -> DenseOperator:
    return DenseOperator(site.entries)


def _two_site(left: SiteMatrix, right: SiteMatrix) -> DenseOperator:
    return _dense(left).kron(_dense(right))


def coproduct_su2(convention: PauliConvention = "half") -> GeneratorSet:
    """J± = σ±⊗I + I⊗σ±, J3 = σz⊗I + I⊗σz on two spins."""
    eye = SiteMatrix.identity()
    gens = []
    for label, axis in (("J+", "+"), ("J-", "-"), ("J3", "z")):
        s = spin(axis, convention)
        gens.append((label, _two_site(s, eye) + _two_site(eye, s)))
    return GeneratorSet(
        name=f"su2-coproduct-{convention}",
        generators=tuple(gens),
        structure_scale=convention_factor(convention),
    )


def coproduct_suq2(gamma: float, convention: PauliConvention = "half") -> GeneratorSet:
    """J′± = σ±⊗q^{σz} + q^{−σz}⊗σ±, J′3 = J3.

    The exponent always uses the half-convention σz.
    """
    k_up = q_power_sigma_z(gamma, +1)
    k_down = q_power_sigma_z(gamma, -1)
    plus = spin("+", convention)
    minus = spin("-", convention)
    j_three = coproduct_su2(convention).operator("J3")
    return GeneratorSet(
        name=f"suq2-coproduct-{convention}",
        generators=(
            ("J+", _two_site(plus, k_up) + _two_site(k_down, plus)),
            ("J-", _two_site(minus, k_up) + _two_site(k_down, minus)),
            ("J3", j_three),
        ),
        gamma=gamma,
        structure_scale=convention_factor(convention),
        algebra="suq2",
    )


def su2_casimir(generators: GeneratorSet) -> DenseOperator:
    """J² = J1² + J2² + J3² with J1 = (J+ + J−)/2, J2 = (J+ − J−)/(2i)."""
    j_plus = generators.operator("J+")
    j_minus = generators.operator("J-")
    j_three = generators.operator("J3")
    j_one = (j_plus + j_minus).scale(0.5)
    j_two = (j_plus - j_minus).scale(-0.5j)
    return j_one @ j_one + j_two @ j_two + j_three @ j_three


def qcasimir_printed_matrix(gamma: float) -> DenseOperator:
    """The explicit 4x4 q-Casimir in its printed slot order (see PRINTED_CASIMIR_ORDER).

    Diagonal [3/2]², e^γ + [1/2]², e^{−γ} + [1/2]², [3/2]², with 1 linking the middle slots.
    """
    outer = q_number(1.5, gamma) ** 2
    inner = q_number(0.5, gamma) ** 2
    matrix = np.diag([outer, math.exp(gamma) + inner, math.exp(-gamma) + inner, outer])
    matrix[1, 2] = matrix[2, 1] = 1.0
    return DenseOperator(matrix)


def _commutes(op: DenseOperator, generators: GeneratorSet) -> bool:
    return all(
        math.sqrt(frobenius_norm_sq(commutator(op, x))) <= _COMMUTATION_TOL for _, x in generators
    )


def qcasimir_matrix(gamma: float) -> DenseOperator:
    """The explicit q-Casimir J′² in the library basis order.

    The printed matrix does not declare its basis. Each candidate slot order is tried
    and the first under which the matrix commutes with `coproduct_suq2(gamma)` is
    kept; that is PRINTED_CASIMIR_ORDER for every γ.

    Raises:
        RuntimeError: If no ordering commutes with the generators.
    """
    printed = qcasimir_printed_matrix(gamma).matrix
    generators = coproduct_suq2(gamma)
    for order in _CASIMIR_ORDERINGS:
        candidate = DenseOperator(printed[np.ix_(order, order)])
        if _commutes(candidate, generators):
            return candidate
    msg = f"No basis ordering makes the q-Casimir commute with su_q(2) at gamma={gamma}"
    raise RuntimeError(msg)


def qcasimir_from_generators(gamma: float) -> DenseOperator:
    """Standard q-Casimir J′−J′+ + [J3 + 1/2]_q² built from the co-product generators."""
    generators = coproduct_suq2(gamma)
    j_three = np.real(np.diag(generators.operator("J3").matrix))
    shifted = DenseOperator.diagonal(q_number(j_three + 0.5, gamma) ** 2)
    return generators.operator("J-") @ generators.operator("J+") + shifted


def qcasimir_from_sinh_form(gamma: float) -> DenseOperator:
    """J′1² + J′2² + sinh²(γJ3)/(γ sinh γ), the sinh-scaled Casimir reading.

    Its q → 1 spectrum is {2, 2, 2, 0}, not the {9/4, 9/4, 9/4, 1/4} of the explicit
    matrix; kept to document that the two readings differ.
    """
    generators = coproduct_suq2(gamma)
    j_plus = generators.operator("J+")
    j_minus = generators.operator("J-")
    j_three = np.real(np.diag(generators.operator("J3").matrix))
    if abs(gamma) < SMALL_GAMMA:
        z_term = j_three**2
    else:
        z_term = np.sinh(gamma * j_three) ** 2 / (gamma * math.sinh(gamma))
    j_one = (j_plus + j_minus).scale(0.5)
    j_two = (j_plus - j_minus).scale(-0.5j)
    return j_one @ j_one + j_two @ j_two + DenseOperator.diagonal(z_term)
