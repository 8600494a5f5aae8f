from nodal_kstab.section_ring.basis import (
    CompatibleBasis,
    JointCompatibleBasis,
    divisor_basis,
    initial_basis,
    section_jets,
)
from nodal_kstab.section_ring.filtrations import (
    DivisorFiltration,
    Filtration,
    ValuationFiltration,
)
from nodal_kstab.section_ring.invariants import (
    BasisTypeDivisor,
    SmRow,
    S_m,
    S_m_from_jumps,
    T_m,
    basis_type_divisor,
    interpolated_S_m,
    interpolated_valuation,
    joint_compatible_basis,
    max_value,
    normalized_divisor_S_m,
    sm_table,
    verify_compatible,
)
from nodal_kstab.section_ring.linalg import Subspace, nullspace, rank
from nodal_kstab.section_ring.space import SectionSpace, dim_forms, dim_space

__all__ = [
    "BasisTypeDivisor",
    "CompatibleBasis",
    "DivisorFiltration",
    "Filtration",
    "JointCompatibleBasis",
    "SectionSpace",
    "SmRow",
    "S_m",
    "S_m_from_jumps",
    "Subspace",
    "T_m",
    "ValuationFiltration",
    "basis_type_divisor",
    "dim_forms",
    "dim_space",
    "divisor_basis",
    "initial_basis",
    "interpolated_S_m",
    "interpolated_valuation",
    "joint_compatible_basis",
    "max_value",
    "normalized_divisor_S_m",
    "nullspace",
    "rank",
    "section_jets",
    "sm_table",
    "verify_compatible",
]
