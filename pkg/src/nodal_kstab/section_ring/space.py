from __future__ import annotations

from dataclasses import dataclass
from typing import List

from nodal_kstab.exceptions import InvalidInputError
from nodal_kstab.local_model.forms import Exponent, Form, monomials_of_degree


def dim_space(m: int) -> int:
    """N_m = h0(P2, O(3m))."""
    if m < 0:
        raise InvalidInputError(f"level must be >= 0, got {m}")
    return (3 * m + 1) * (3 * m + 2) // 2


def dim_forms(degree: int) -> int:
    return 0 if degree < 0 else (degree + 1) * (degree + 2) // 2


@dataclass(frozen=True)
class SectionSpace:
    """R_m: forms of degree 3m on the plane."""

    m: int

    def __post_init__(self):
        if self.m < 0:
            raise InvalidInputError(f"level must be >= 0, got {self.m}")

    @property
    def degree(self) -> int:
        return 3 * self.m

    @property
    def dimension(self) -> int:
        return dim_space(self.m)

    @property
    def monomials(self) -> List[Exponent]:
        return monomials_of_degree(self.degree)

    def basis(self) -> List[Form]:
        return [Form.monomial(e) for e in self.monomials]
