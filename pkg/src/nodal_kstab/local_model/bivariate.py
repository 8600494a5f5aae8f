"""Truncated power series in the branch coordinates z and w."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from nodal_kstab.exceptions import InvalidInputError

Monomial = Tuple[int, int]


def weight_key(a: int, b: int):
    """Sort key for z**i w**j: weighted degree, ties to the larger z exponent."""
    return lambda m: (a * m[0] + b * m[1], -m[0])


def _cross(o: Monomial, p: Monomial, q: Monomial) -> int:
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: Tuple[Monomial, ...]
    certified: bool

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices], "certified": self.certified}


@dataclass(frozen=True)
class BivariateSeries:
    """Sum of c_ij z**i w**j, exact for every term of total degree <= truncation.

    When ``window`` holds weights (a, b) only the terms with
    a*i + b*j < min(a, b) * (truncation + 1) were materialized.
    """

    coefficients: Dict[Monomial, Fraction] = field(compare=True)
    truncation: int
    window: Optional[Tuple[int, int]] = None

    def __post_init__(self):
        if self.truncation < 0:
            raise InvalidInputError(f"truncation must be >= 0, got {self.truncation}")
        object.__setattr__(
            self, "coefficients", {m: c for m, c in self.coefficients.items() if c != 0}
        )

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self.coefficients.get(tuple(monomial), Fraction(0))

    def support(self) -> List[Monomial]:
        return sorted(self.coefficients)

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def certified_bound(self, a: int, b: int) -> int:
        """Weighted orders strictly below this value are determined exactly."""
        return min(a, b) * (self.truncation + 1)

    def weighted_order(self, a: int, b: int) -> Optional[int]:
        if not self.coefficients:
            return None
        return min(a * i + b * j for i, j in self.coefficients)

    def initial_terms(self, a: int, b: int) -> Dict[Monomial, Fraction]:
        order = self.weighted_order(a, b)
        if order is None:
            return {}
        return {m: c for m, c in self.coefficients.items() if a * m[0] + b * m[1] == order}

    def newton_polygon(self) -> NewtonPolygon:
        """Compact faces of the Newton polygon, vertices by decreasing z exponent."""
        if not self.coefficients:
            raise InvalidInputError("the zero series has no Newton polygon")
        lowest: Dict[int, int] = {}
        for i, j in self.coefficients:
            if j < lowest.get(i, j + 1):
                lowest[i] = j
        staircase: List[Monomial] = []
        for i in sorted(lowest):
            if not staircase or lowest[i] < staircase[-1][1]:
                staircase.append((i, lowest[i]))
        hull: List[Monomial] = []
        for p in staircase:
            while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) <= 0:
                hull.pop()
            hull.append(p)
        vertices = tuple(reversed(hull))
        certified = vertices[0][1] == 0 and vertices[-1][0] == 0
        if self.window is not None:
            bound = self.certified_bound(*self.window)
            a, b = self.window
            certified = certified and all(a * i + b * j < bound for i, j in vertices)
        return NewtonPolygon(vertices, certified)

    def to_json(self) -> dict:
        return {
            "truncation": self.truncation,
            "terms": [
                [i, j, str(self.coefficients[(i, j)])] for i, j in self.support()
            ],
        }
