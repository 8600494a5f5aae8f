"""Filtrations of the anticanonical section ring."""
from __future__ import annotations

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from nodal_kstab.exceptions import InfiniteValuationError, InvalidInputError
from nodal_kstab.local_model.forms import Form
from nodal_kstab.local_model.valuation import (
    DEFAULT_TRUNCATION_CAP,
    MonomialValuation,
    vweight,
)
from nodal_kstab.section_ring.basis import (
    CompatibleBasis,
    divisor_basis,
    expected_divisor_flag,
    initial_basis,
    section_jets,
)
from nodal_kstab.section_ring.linalg import Subspace


class Filtration(ABC):
    """A decreasing, multiplicative filtration F^lambda R_m with a value oracle."""

    kind: str = "abstract"

    @abstractmethod
    def value(self, section: Form) -> Fraction:
        """Largest lambda with section in F^lambda."""

    @abstractmethod
    def compatible_basis(self, m: int, order: Optional[Sequence[int]] = None) -> CompatibleBasis:
        pass

    @abstractmethod
    def flag_dimensions(self, m: int) -> Dict[Fraction, int]:
        """dim F^lambda R_m at every jump, computed without the compatible basis."""

    def flag(self, m: int) -> List[Tuple[Fraction, Subspace]]:
        """Jumps from the largest down, each with its subspace."""
        basis = self.compatible_basis(m)
        return [(jump, basis.span_at(jump)) for jump in basis.jumps()]

    def describe(self) -> str:
        return self.kind


class ValuationFiltration(Filtration):
    """F^lambda R_m = {s : v(s) >= lambda} for a monomial valuation at the node.

    With ``normalize`` the values are those of v_t = ord / a, otherwise the
    integer weighted orders.
    """

    kind = "valuation"

    def __init__(self, valuation: MonomialValuation, normalize: bool = True, cap: int = DEFAULT_TRUNCATION_CAP):
        self.valuation = valuation
        self.normalize = normalize
        self.cap = cap

    def _scale(self, value: Fraction) -> Fraction:
        return value if self.normalize else value * self.valuation.a

    def value(self, section: Form) -> Fraction:
        return self._scale(vweight(self.valuation, section, self.cap).value)

    def compatible_basis(self, m: int, order: Optional[Sequence[int]] = None) -> CompatibleBasis:
        basis = initial_basis(self.valuation, m, order, self.cap)
        if self.normalize:
            return basis
        return CompatibleBasis(basis.m, basis.sections, tuple(self._scale(v) for v in basis.values), basis.initial_monomials)

    def flag_dimensions(self, m: int) -> Dict[Fraction, int]:
        """N_m minus the rank of the jets truncated below each jump."""
        v = self.valuation
        jets = section_jets(v, m, self.cap)
        orders = sorted({v.weight(*mono) for jet in jets for mono in jet})
        out: Dict[Fraction, int] = {}
        for p in orders:
            truncated = [{mono: c for mono, c in jet.items() if v.weight(*mono) < p} for jet in jets]
            dimension = len(jets) - Subspace(j for j in truncated if j).dim
            if dimension == 0:
                break
            out[self._scale(v.normalize(p))] = dimension
        return _jumps_only(out)

    def describe(self) -> str:
        return f"valuation{self.valuation.weights}"


class DivisorFiltration(Filtration):
    """F^k R_m = {s : (s = 0) >= k * G} for an effective curve G = (curve = 0)."""

    kind = "divisor"

    def __init__(self, curve: Form):
        if curve.is_zero or curve.degree <= 0:
            raise InvalidInputError("a divisor filtration needs a curve of positive degree")
        self.curve = curve

    def value(self, section: Form) -> Fraction:
        if section.is_zero:
            raise InfiniteValuationError("the zero section vanishes along every curve")
        return Fraction(section.multiplicity_of(self.curve))

    def compatible_basis(self, m: int, order: Optional[Sequence[int]] = None) -> CompatibleBasis:
        return divisor_basis(self.curve, m, order)

    def flag_dimensions(self, m: int) -> Dict[Fraction, int]:
        return _jumps_only(expected_divisor_flag(self.curve, m))

    def describe(self) -> str:
        return f"divisor(deg {self.curve.degree})"


def _jumps_only(dims: Dict[Fraction, int]) -> Dict[Fraction, int]:
    """Keep lambda where dim F^lambda drops just above it."""
    keys = sorted(dims)
    return {lam: dims[lam] for i, lam in enumerate(keys) if i + 1 == len(keys) or dims[keys[i + 1]] < dims[lam]}