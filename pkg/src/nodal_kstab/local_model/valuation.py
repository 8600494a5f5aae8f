"""Quasimonomial valuations at the node and their values on forms."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from nodal_kstab.exceptions import (
    InfiniteValuationError,
    InvalidInputError,
    TruncationExhaustedError,
)
from nodal_kstab.exactnum.rational import IntOrRational, as_rational
from nodal_kstab.local_model.chart import localize
from nodal_kstab.local_model.forms import Form
from nodal_kstab.utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_TRUNCATION_CAP = 512


@dataclass(frozen=True)
class MonomialValuation:
    """v_(a,b): weight a on the branch z, weight b on the branch w."""

    a: int
    b: int

    def __post_init__(self):
        if isinstance(self.a, bool) or isinstance(self.b, bool):
            raise InvalidInputError("weights must be integers")
        if self.a <= 0 or self.b <= 0:
            raise InvalidInputError(f"weights must be positive, got ({self.a}, {self.b})")
        if math.gcd(self.a, self.b) != 1:
            raise InvalidInputError(f"weights must be coprime, got ({self.a}, {self.b})")

    @classmethod
    def from_slope(cls, t: IntOrRational) -> "MonomialValuation":
        t = as_rational(t)
        if t <= 0:
            raise InvalidInputError(f"slope must be positive, got {t}")
        return cls(t.denominator, t.numerator)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.b, self.a)

    @property
    def weights(self) -> Tuple[int, int]:
        return (self.a, self.b)

    @property
    def log_discrepancy(self) -> int:
        return self.a + self.b

    def swapped(self) -> "MonomialValuation":
        return MonomialValuation(self.b, self.a)

    def weight(self, i: int, j: int) -> int:
        return self.a * i + self.b * j

    def normalize(self, order: int) -> Fraction:
        """Value of the normalized valuation v_t = v_(a,b) / a."""
        return Fraction(order, self.a)


@dataclass(frozen=True)
class WeightedOrder:
    order: int
    value: Fraction
    truncation: int

    def to_json(self) -> dict:
        return {"ord": self.order, "v_t_value": str(self.value), "truncation": self.truncation}


def initial_truncation(v: MonomialValuation, degree: int) -> int:
    return 2 * degree * max(1, -(-v.b // v.a))


def required_truncation(v: MonomialValuation, degree: int) -> int:
    """A truncation that certifies ord for every nonzero form of ``degree``.

    The weighted order of a degree-D form is at most D*max(a, b) through its
    multiplicity at the node, and at most D*max(3ab/(a+b), (a+b)/3) through
    its local intersection with the cubic.
    """
    if degree < 0:
        raise InvalidInputError(f"degree must be >= 0, got {degree}")
    a, b = v.a, v.b
    through_cubic = max(Fraction(3 * a * b, a + b), Fraction(a + b, 3))
    bound = degree * min(Fraction(max(a, b)), through_cubic)
    return math.floor(bound / min(a, b))


def order_bound(v: MonomialValuation, degree: int) -> Fraction:
    """Upper bound on the weighted order of a nonzero degree-D form."""
    a, b = v.a, v.b
    return degree * min(
        Fraction(max(a, b)), max(Fraction(3 * a * b, a + b), Fraction(a + b, 3))
    )


@lru_cache(maxsize=8192)
def _weighted_order(v: MonomialValuation, form: Form, cap: int) -> WeightedOrder:
    N = min(initial_truncation(v, form.degree), cap)
    while True:
        series = localize(form, N, v.weights)
        order = series.weighted_order(v.a, v.b)
        if order is not None and order < series.certified_bound(v.a, v.b):
            return WeightedOrder(order, v.normalize(order), N)
        if N >= cap:
            raise TruncationExhaustedError(
                f"weighted order of a degree {form.degree} form under {v.weights} "
                f"not certified below truncation {N}",
                truncation=N,
            )
        logger.debug(f"🔁 Deepening truncation | weights={v.weights}, from={N}")
        N = min(2 * N if N else 1, cap)


def vweight(
    v: MonomialValuation, form: Form, cap: int = DEFAULT_TRUNCATION_CAP
) -> WeightedOrder:
    """Certified ord_(a,b) of a nonzero form at the node."""
    if form.is_zero:
        raise InfiniteValuationError()
    return _weighted_order(v, form, cap)
