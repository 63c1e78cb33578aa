"""Concrete generator sets and Hamiltonians: Fock subspace, co-products and spin chains."""

from asymmetry_cli.models.chain import (
    BOND_CONVENTIONS,
    BOUNDARY_CONVENTIONS,
    BondConvention,
    BoundaryConvention,
    ChainSpec,
    ConventionResolution,
    all_up_state,
    chain_su2_generators,
    chain_suq2_generators,
    h_q,
    h_xxx,
    hq_commutator_analytic,
    resolve_convention,
)
from asymmetry_cli.models.coproduct import (
    PRINTED_CASIMIR_ORDER,
    coproduct_su2,
    coproduct_suq2,
    qcasimir_from_generators,
    qcasimir_from_sinh_form,
    qcasimir_matrix,
    qcasimir_printed_matrix,
    su2_casimir,
)
from asymmetry_cli.models.fock import FockSubspaceSpec, fock_qhamiltonian, fock_su2_generators
from asymmetry_cli.models.qnumber import DeformationParam, q_number
from asymmetry_cli.models.relations import check_algebra

__all__ = [
    "BOND_CONVENTIONS",
    "BOUNDARY_CONVENTIONS",
    "PRINTED_CASIMIR_ORDER",
    "BondConvention",
    "BoundaryConvention",
    "ChainSpec",
    "ConventionResolution",
    "DeformationParam",
    "FockSubspaceSpec",
    "all_up_state",
    "chain_su2_generators",
    "chain_suq2_generators",
    "check_algebra",
    "coproduct_su2",
    "coproduct_suq2",
    "fock_qhamiltonian",
    "fock_su2_generators",
    "h_q",
    "h_xxx",
    "hq_commutator_analytic",
    "q_number",
    "qcasimir_from_generators",
    "qcasimir_from_sinh_form",
    "qcasimir_matrix",
    "qcasimir_printed_matrix",
    "resolve_convention",
    "su2_casimir",
]
