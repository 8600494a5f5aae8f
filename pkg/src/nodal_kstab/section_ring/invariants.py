"""Finite-level invariants S_m and T_m, joint bases and basis type divisors."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from nodal_kstab.exceptions import InvalidInputError, LemmaViolationError
from nodal_kstab.exactnum.rational import IntOrRational, as_rational
from nodal_kstab.local_model.forms import Form
from nodal_kstab.local_model.valuation import DEFAULT_TRUNCATION_CAP, MonomialValuation
from nodal_kstab.section_ring.basis import CompatibleBasis, JointCompatibleBasis
from nodal_kstab.section_ring.filtrations import (
    DivisorFiltration,
    Filtration,
    ValuationFiltration,
)
from nodal_kstab.section_ring.linalg import Subspace
from nodal_kstab.section_ring.space import dim_space
from nodal_kstab.utils.logger import get_logger

logger = get_logger(__name__)


def _positive_level(m: int):
    if m < 1:
        raise InvalidInputError(f"level must be >= 1, got {m}")


def S_m(filtration: Filtration, m: int, order: Optional[Sequence[int]] = None) -> Fraction:
    """(1 / (m N_m)) * sum of the values of a compatible basis."""
    _positive_level(m)
    basis = filtration.compatible_basis(m, order)
    return sum(basis.values, Fraction(0)) / (m * dim_space(m))


def S_m_from_jumps(filtration: Filtration, m: int) -> Fraction:
    """The same average as the integral of dim F^lambda over lambda > 0."""
    _positive_level(m)
    dims = filtration.flag_dimensions(m)
    jumps = sorted(dims)
    total = Fraction(0)
    previous = Fraction(0)
    for lam in jumps:
        if lam > previous:
            total += (lam - previous) * dims[lam]
            previous = lam
    return total / (m * dim_space(m))


def max_value(v: MonomialValuation, m: int, cap: int = DEFAULT_TRUNCATION_CAP) -> Fraction:
    """max v_t(s) over nonzero s in R_m; initial-term elimination attains it."""
    _positive_level(m)
    return max(ValuationFiltration(v, cap=cap).compatible_basis(m).values)


def T_m(v: MonomialValuation, m: int, cap: int = DEFAULT_TRUNCATION_CAP) -> Fraction:
    """T_m(v) = max v(s) / m."""
    return max_value(v, m, cap) / m


def normalized_divisor_S_m(curve: Form, m: int) -> Fraction:
    """S_m of the divisor filtration rescaled to the anticanonical class: S_m * deg / 3."""
    return S_m(DivisorFiltration(curve), m) * curve.degree / 3


def verify_compatible(basis: CompatibleBasis, filtration: Filtration) -> bool:
    """Spanning property: at each jump the sections of value >= lambda have the rank of F^lambda."""
    expected = filtration.flag_dimensions(basis.m)
    for lam, dimension in expected.items():
        if basis.span_at(lam).dim != dimension:
            return False
    return sorted(expected) == sorted(set(basis.values))


def joint_compatible_basis(first: Filtration, second: Filtration, m: int) -> JointCompatibleBasis:
    """One basis of R_m compatible with both filtrations.

    For jumps i of the first flag and j of the second, A = F_i & G_j and
    B = F_(i-1) & G_j + F_i & G_(j-1), where index -1 is the zero space; a
    complement of B in A contributes sections with values (i-th, j-th jump).
    """
    f_flag = first.flag(m)
    g_flag = second.flag(m)
    f_spaces = [Subspace()] + [space for _, space in f_flag]
    g_spaces = [Subspace()] + [space for _, space in g_flag]

    meets: Dict[tuple, Subspace] = {}
    for i in range(len(f_spaces)):
        for j in range(len(g_spaces)):
            if i == 0 or j == 0:
                meets[(i, j)] = Subspace()
            else:
                meets[(i, j)] = f_spaces[i].intersection(g_spaces[j])

    degree = 3 * m
    sections: List[Form] = []
    f_values: List[Fraction] = []
    g_values: List[Fraction] = []
    for i in range(1, len(f_spaces)):
        for j in range(1, len(g_spaces)):
            lower = meets[(i - 1, j)] + meets[(i, j - 1)]
            for vector in lower.complement_in(meets[(i, j)].basis()):
                sections.append(Form.from_dict(degree, vector))
                f_values.append(f_flag[i - 1][0])
                g_values.append(g_flag[j - 1][0])

    if len(sections) != dim_space(m):
        raise LemmaViolationError(
            f"joint basis of R_{m} has {len(sections)} sections, expected {dim_space(m)}"
        )
    joint = JointCompatibleBasis(m, tuple(sections), tuple(f_values), tuple(g_values))
    if not (verify_compatible(joint.as_first(), first) and verify_compatible(joint.as_second(), second)):
        raise LemmaViolationError(f"joint basis of R_{m} fails a spanning check")
    logger.debug(f"✅ Joint compatible basis | {first.describe()} x {second.describe()}, m={m}")
    return joint


@dataclass(frozen=True)
class BasisTypeDivisor:
    """(1 / (m N_m)) * sum of the zero divisors of a basis of R_m."""

    m: int
    sections: tuple

    def __post_init__(self):
        _positive_level(self.m)
        if len(self.sections) != dim_space(self.m):
            raise InvalidInputError(f"a basis of R_{self.m} has {dim_space(self.m)} sections")

    @property
    def weight(self) -> Fraction:
        return Fraction(1, self.m * dim_space(self.m))

    def evaluate(self, filtration: Filtration) -> Fraction:
        """v(D) for the filtration's value oracle."""
        return self.weight * sum((filtration.value(s) for s in self.sections), Fraction(0))

    def coefficient_along(self, curve: Form) -> Fraction:
        """Coefficient of (curve = 0) in D."""
        return self.weight * sum((Fraction(s.multiplicity_of(curve)) for s in self.sections), Fraction(0))


def basis_type_divisor(basis, m: int) -> BasisTypeDivisor:
    return BasisTypeDivisor(m, tuple(basis.sections))


def interpolated_S_m(
    v0: MonomialValuation, v1: MonomialValuation, u: IntOrRational, m: int
) -> Fraction:
    """(1 / (m N_m)) * sum of (1-u) v0(s) + u v1(s) over a basis compatible with both."""
    _positive_level(m)
    u = as_rational(u)
    if not 0 <= u <= 1:
        raise InvalidInputError(f"interpolation parameter must lie in [0, 1], got {u}")
    joint = joint_compatible_basis(ValuationFiltration(v0), ValuationFiltration(v1), m)
    total = sum(
        ((1 - u) * x + u * y for x, y in zip(joint.first_values, joint.second_values)),
        Fraction(0),
    )
    return total / (m * dim_space(m))


def interpolated_valuation(v0: MonomialValuation, v1: MonomialValuation, u: IntOrRational) -> MonomialValuation:
    """v_s with slope (1-u) t0 + u t1."""
    u = as_rational(u)
    return MonomialValuation.from_slope((1 - u) * v0.slope + u * v1.slope)


@dataclass(frozen=True)
class SmRow:
    a: int
    b: int
    m: int
    N_m: int
    S_m: Fraction
    T_m: Fraction

    @property
    def t(self) -> Fraction:
        return Fraction(self.b, self.a)


def sm_table(a: int, b: int, m_max: int, cap: int = DEFAULT_TRUNCATION_CAP) -> List[SmRow]:
    v = MonomialValuation(a, b)
    _positive_level(m_max)
    filtration = ValuationFiltration(v, cap=cap)
    rows = []
    for m in range(1, m_max + 1):
        rows.append(SmRow(a, b, m, dim_space(m), S_m(filtration, m), T_m(v, m, cap)))
        logger.info(f"📊 S_m row | weights={v.weights}, m={m}, S_m={rows[-1].S_m}")
    return rows
