"""Intersection theory on the (a, b)-weighted blowup of the plane at the node.

Classes are written d*L - k*E with L the pulled-back line and E the
exceptional divisor: L.L = 1, L.E = 0, E.E = -1/(ab).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from nodal_kstab.exceptions import InvalidInputError, LemmaViolationError
from nodal_kstab.exactnum.rational import IntOrRational, as_rational
from nodal_kstab.local_model.forms import Form
from nodal_kstab.local_model.valuation import DEFAULT_TRUNCATION_CAP, MonomialValuation, vweight


@dataclass(frozen=True)
class BlowupModel:
    a: int
    b: int

    def __post_init__(self):
        if self.a <= 0 or self.b <= 0 or math.gcd(self.a, self.b) != 1:
            raise InvalidInputError(f"blowup weights must be coprime positive integers, got ({self.a}, {self.b})")

    @property
    def exceptional_square(self) -> Fraction:
        return Fraction(-1, self.a * self.b)

    @property
    def log_discrepancy(self) -> int:
        return self.a + self.b

    @property
    def valuation(self) -> MonomialValuation:
        return MonomialValuation(self.a, self.b)

    def intersection(self, first: "CurveClass", second: "CurveClass") -> Fraction:
        return first.degree * second.degree + first.ord * second.ord * self.exceptional_square


@dataclass(frozen=True)
class CurveClass:
    """Strict transform d*L - ord*E of a degree-d curve."""

    degree: int
    ord: int
    a: int
    b: int

    @property
    def self_intersection(self) -> Fraction:
        return self.degree ** 2 - Fraction(self.ord ** 2, self.a * self.b)

    def to_json(self) -> dict:
        return {"degree": self.degree, "ord": self.ord, "self_int": str(self.self_intersection)}


@dataclass(frozen=True)
class FujitaTriple:
    T: Fraction
    epsilon: Fraction
    S: Fraction

    def normalized(self, a: int) -> "FujitaTriple":
        """The triple for v_t = ord_E / a."""
        return FujitaTriple(self.T / a, self.epsilon / a, self.S / a)


@dataclass(frozen=True)
class TCertificate:
    T: Fraction
    kind: str  # "negative" or "nef-boundary"


def strict_transform_class(curve: Form, v: MonomialValuation, cap: int = DEFAULT_TRUNCATION_CAP) -> CurveClass:
    return CurveClass(curve.degree, vweight(v, curve, cap).order, v.a, v.b)


def t_certificate(witness: CurveClass, irreducible: bool) -> Optional[TCertificate]:
    """T = 3 ord / d when the irreducible witness has nonpositive self-intersection."""
    if not irreducible:
        raise InvalidInputError("a pseudoeffective threshold witness must be irreducible")
    square = witness.self_intersection
    if square > 0:
        return None
    T = Fraction(3 * witness.ord, witness.degree)
    return TCertificate(T, "negative" if square < 0 else "nef-boundary")


def fujita_complete(T: IntOrRational, a: int, b: int) -> FujitaTriple:
    """T * epsilon = 9ab and S = (T + epsilon) / 3."""
    T = as_rational(T)
    if T <= 0:
        raise InvalidInputError(f"T must be positive, got {T}")
    epsilon = Fraction(9 * a * b) / T
    return FujitaTriple(T, epsilon, (T + epsilon) / 3)


def nef_threshold_from_witness(witness: CurveClass) -> Fraction:
    """lambda with (3L - lambda*E).(dL - ord*E) = 0, i.e. 3d*ab/ord."""
    if witness.ord == 0:
        raise InvalidInputError("a witness through the node is required")
    return Fraction(3 * witness.degree * witness.a * witness.b, witness.ord)


def check_fujita(witness: CurveClass, triple: FujitaTriple):
    """lambda * T = 9ab for the witness threshold."""
    ab = witness.a * witness.b
    if nef_threshold_from_witness(witness) * triple.T != 9 * ab:
        raise LemmaViolationError(
            f"nef threshold of the witness disagrees with T * epsilon = 9ab at ({witness.a}, {witness.b})"
        )
    if triple.T * triple.epsilon != 9 * ab or 3 * triple.S != triple.T + triple.epsilon:
        raise LemmaViolationError("Fujita triple is inconsistent")
