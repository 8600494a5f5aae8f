"""Bases of R_m compatible with a filtration."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from nodal_kstab.exceptions import InvalidInputError, LemmaViolationError, TruncationExhaustedError
from nodal_kstab.local_model.bivariate import Monomial, weight_key
from nodal_kstab.local_model.chart import localize
from nodal_kstab.local_model.forms import Form, monomials_of_degree
from nodal_kstab.local_model.valuation import (
    DEFAULT_TRUNCATION_CAP,
    MonomialValuation,
    order_bound,
    required_truncation,
)
from nodal_kstab.section_ring.linalg import Subspace, Vector, add_scaled
from nodal_kstab.section_ring.space import SectionSpace, dim_forms
from nodal_kstab.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class CompatibleBasis:
    m: int
    sections: Tuple[Form, ...]
    values: Tuple[Fraction, ...]
    initial_monomials: Optional[Tuple[Monomial, ...]] = None

    def __len__(self) -> int:
        return len(self.sections)

    def jumps(self) -> List[Fraction]:
        """Distinct values, largest first."""
        return sorted(set(self.values), reverse=True)

    def span_at(self, value: Fraction) -> Subspace:
        """Span of the sections with value >= ``value``."""
        return Subspace(s.coefficients for s, v in zip(self.sections, self.values) if v >= value)

    def to_json(self) -> dict:
        payload = {
            "m": self.m,
            "sections": [s.to_text() for s in self.sections],
            "values": [str(v) for v in self.values],
        }
        if self.initial_monomials is not None:
            payload["initial_monomials"] = [list(mono) for mono in self.initial_monomials]
        return payload


@dataclass(frozen=True)
class JointCompatibleBasis:
    m: int
    sections: Tuple[Form, ...]
    first_values: Tuple[Fraction, ...]
    second_values: Tuple[Fraction, ...]

    def as_first(self) -> CompatibleBasis:
        return CompatibleBasis(self.m, self.sections, self.first_values)

    def as_second(self) -> CompatibleBasis:
        return CompatibleBasis(self.m, self.sections, self.second_values)


def _check_order(order: Optional[Sequence[int]], n: int) -> Tuple[int, ...]:
    if order is None:
        return tuple(range(n))
    order = tuple(order)
    if sorted(order) != list(range(n)):
        raise InvalidInputError(f"elimination order must be a permutation of range({n})")
    return order


def section_jets(v: MonomialValuation, m: int, cap: int = DEFAULT_TRUNCATION_CAP) -> List[Dict[Monomial, Fraction]]:
    """(z, w)-jets of the monomial basis of R_m, every weight up to the order bound kept."""
    space = SectionSpace(m)
    N = required_truncation(v, space.degree)
    if N > cap:
        raise TruncationExhaustedError(
            f"level {m} under {v.weights} needs truncation {N} above the cap {cap}", truncation=N
        )
    bound = order_bound(v, space.degree)
    jets = []
    for e in space.monomials:
        series = localize(Form.monomial(e), N, v.weights)
        jets.append({mono: c for mono, c in series.coefficients.items() if v.weight(*mono) <= bound})
    return jets


@lru_cache(maxsize=256)
def _initial_basis(v: MonomialValuation, m: int, order: Tuple[int, ...], cap: int) -> CompatibleBasis:
    space = SectionSpace(m)
    monomials = space.monomials
    jets = section_jets(v, m, cap)
    rows: List[Tuple[Vector, Vector]] = [(dict(jets[i]), {monomials[i]: Fraction(1)}) for i in order]

    columns = sorted({mono for jet, _ in rows for mono in jet}, key=weight_key(v.a, v.b))
    pending = list(range(len(rows)))
    sections, values, initials = [], [], []
    for col in columns:
        pivot = next((r for r in pending if col in rows[r][0]), None)
        if pivot is None:
            continue
        pending.remove(pivot)
        pivot_jet, pivot_coeffs = rows[pivot]
        lead = pivot_jet[col]
        for r in pending:
            c = rows[r][0].get(col)
            if c:
                factor = -c / lead
                add_scaled(rows[r][0], pivot_jet, factor)
                add_scaled(rows[r][1], pivot_coeffs, factor)
        sections.append(Form.from_dict(space.degree, pivot_coeffs))
        values.append(v.normalize(v.weight(*col)))
        initials.append(col)
        if not pending:
            break
    if pending:
        raise LemmaViolationError(
            f"{len(pending)} sections of R_{m} vanish to weighted order above the bound under {v.weights}"
        )
    logger.debug(f"✅ Initial basis | weights={v.weights}, m={m}, sections={len(sections)}")
    return CompatibleBasis(m, tuple(sections), tuple(values), tuple(initials))


def initial_basis(
    v: MonomialValuation,
    m: int,
    order: Optional[Sequence[int]] = None,
    cap: int = DEFAULT_TRUNCATION_CAP,
) -> CompatibleBasis:
    """Basis of R_m with pairwise distinct initial (z, w)-monomials under v.

    Gaussian elimination over the jets, columns taken by increasing weighted
    degree; among the rows not yet used, the first one in ``order`` (a
    permutation of the monomial basis indices) becomes the pivot. Values are
    normalized, ord / a.
    """
    if m < 0:
        raise InvalidInputError(f"level must be >= 0, got {m}")
    order = _check_order(order, SectionSpace(m).dimension)
    return _initial_basis(v, m, order, cap)


def divisor_basis(curve: Form, m: int, order: Optional[Sequence[int]] = None) -> CompatibleBasis:
    """Basis of R_m adapted to F^k = curve**k * R_(3m - k*deg(curve)).

    Monomials outside the leading-term ideal of the curve complement
    curve * R_(d - deg) in R_d, so stage k contributes curve**k * x**e for the
    residual monomials e not divisible by the leading monomial. Within a stage
    sections are ranked by the position of x0**(k*deg) * x**e in ``order``.
    """
    if curve.is_zero or curve.degree <= 0:
        raise InvalidInputError("a divisor filtration needs a curve of positive degree")
    space = SectionSpace(m)
    rank_of = {e: r for r, e in enumerate(space.monomials[i] for i in _check_order(order, space.dimension))}
    lead = max(curve.coefficients)
    sections, values = [], []
    for k in range(space.degree // curve.degree, -1, -1):
        shift = k * curve.degree
        power = curve ** k
        residual = sorted(
            (e for e in monomials_of_degree(space.degree - shift) if any(e[i] < lead[i] for i in range(3))),
            key=lambda e: rank_of[(e[0] + shift, e[1], e[2])],
        )
        for e in residual:
            sections.append(power * Form.monomial(e))
            values.append(Fraction(k))
    if len(sections) != space.dimension:
        raise LemmaViolationError(
            f"divisor basis of R_{m} has {len(sections)} sections, expected {space.dimension}"
        )
    return CompatibleBasis(m, tuple(sections), tuple(values))


def expected_divisor_flag(curve: Form, m: int) -> Dict[Fraction, int]:
    """dim F^k R_m = h0(O(3m - k*deg)) for every k with a nonempty step."""
    degree = 3 * m
    return {Fraction(k): dim_forms(degree - k * curve.degree) for k in range(degree // curve.degree + 1)}
