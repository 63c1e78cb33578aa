"""Residuals of the defining relations of su(2) and su_q(2) generator sets."""

from __future__ import annotations

import numpy as np

from asymmetry_cli.asymmetry import GeneratorSet
from asymmetry_cli.models.qnumber import q_number
from asymmetry_cli.operators import DenseOperator, frobenius_norm_sq


def _norm(op: DenseOperator) -> float:
    return float(np.sqrt(frobenius_norm_sq(op)))


def _q_function(j_three: DenseOperator, scale: float, gamma: float) -> DenseOperator:
    # [2 J3 / λ]_q through the spectral decomposition of the Hermitian J3
    values, vectors = np.linalg.eigh(j_three.matrix)
    mapped = q_number(2.0 * values / scale, gamma)
    return DenseOperator((vectors * mapped) @ vectors.conj().T)


def check_algebra(generators: GeneratorSet) -> dict[str, float]:
    """Frobenius norms of the relation residuals for a {J+, J-, J3} set.

    With λ = `structure_scale`, the residuals are

        [J3, J±] ∓ λ J±
        [J+, J−] − 2λ J3          (su2)
        [J+, J−] − λ² [2 J3/λ]_q  (suq2)

    All are evaluated densely.

    Returns:
        Mapping from relation label to residual norm; zero up to rounding when the
        set represents its algebra.
    """
    dense = generators.to_backend("dense")
    j_plus = dense.operator("J+")
    j_minus = dense.operator("J-")
    j_three = dense.operator("J3")
    lam = generators.structure_scale

    residuals = {
        "[J3,J+]": _norm(j_three.commutator(j_plus) - j_plus.scale(lam)),
        "[J3,J-]": _norm(j_three.commutator(j_minus) + j_minus.scale(lam)),
    }
    if generators.algebra == "suq2":
        target = _q_function(j_three, lam, generators.gamma).scale(lam**2)
    else:
        target = j_three.scale(2.0 * lam)
    residuals["[J+,J-]"] = _norm(j_plus.commutator(j_minus) - target)
    return residuals
