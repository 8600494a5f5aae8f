"""The singular plane curves D_n and their local data at the node.

D_n has degree d_n and weighted order d_(n-1) d_(n+1) under the weights
(d_(n-1), d_(n+1)) on the branches; the order conditions below that weight
cut out exactly one curve.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple

from nodal_kstab.exceptions import InvalidInputError, LemmaViolationError
from nodal_kstab.local_model.bivariate import NewtonPolygon
from nodal_kstab.local_model.chart import localize
from nodal_kstab.local_model.forms import Form, monomials_of_degree
from nodal_kstab.local_model.valuation import (
    DEFAULT_TRUNCATION_CAP,
    MonomialValuation,
    WeightedOrder,
    vweight,
)
from nodal_kstab.nodal_catalog.sequence import d_sequence
from nodal_kstab.section_ring.linalg import nullspace
from nodal_kstab.utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_DN_MAX = 4
DEFAULT_IRREDUCIBILITY_MAX = 3


@dataclass(frozen=True)
class SingularCurve:
    n: int
    form: Form
    weights: Tuple[int, int]
    order: int
    kernel_dimension: int
    polygon: NewtonPolygon
    irreducible: bool
    provenance: str

    @property
    def degree(self) -> int:
        return self.form.degree

    def coefficient_rows(self) -> List[Tuple[int, int, int, Fraction]]:
        return [(e[0], e[1], e[2], c) for e, c in self.form.terms]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "degree": self.degree,
            "form": self.form.to_text(),
            "weights": list(self.weights),
            "ord": self.order,
            "kernel_dimension": self.kernel_dimension,
            "newton_polygon": self.polygon.to_json(),
            "irreducible": self.irreducible,
            "provenance": self.provenance,
        }


def forms_with_order(degree: int, v: MonomialValuation, order: int) -> List[Form]:
    """Basis of the degree-``degree`` forms whose weighted order under v is at least ``order``."""
    monomials = monomials_of_degree(degree)
    if order <= 0:
        return [Form.monomial(e) for e in monomials]
    N = (order - 1) // min(v.a, v.b)
    conditions = {}
    for e in monomials:
        series = localize(Form.monomial(e), N, v.weights)
        for mono, c in series.coefficients.items():
            if v.weight(*mono) < order:
                conditions.setdefault(mono, {})[e] = c
    kernel = nullspace(list(conditions.values()), monomials)
    return [Form.from_dict(degree, vector) for vector in kernel]


def newton_polygon(curve: Form, N: int) -> NewtonPolygon:
    """Vertices of the lower hull of the (z, w)-support, largest z exponent first."""
    return localize(curve, N).newton_polygon()


def irreducibility_certificate(curve: Form, v: MonomialValuation, order: int) -> bool:
    """True when no factor of ``curve`` can exist.

    A factorization into degrees e and d - e splits the weighted order, so
    one factor of some degree e < d would reach ceil(e * order / d). The
    certificate checks that no nonzero form of degree e does, for every e.
    The linear systems are defined over Q, so the answer holds over C.
    """
    d = curve.degree
    for e in range(1, d):
        threshold = -(-e * order // d)
        if forms_with_order(e, v, threshold):
            logger.debug(f"⚠️ Irreducibility certificate fails | degree={d}, split={e}")
            return False
    return True


def ord_on_weights(curve: Form, weights: Tuple[int, int], cap: int = DEFAULT_TRUNCATION_CAP) -> WeightedOrder:
    return vweight(MonomialValuation(*weights), curve, cap)


@lru_cache(maxsize=16)
def construct_Dn(
    n: int,
    dn_max: int = DEFAULT_DN_MAX,
    irreducibility_max: int = DEFAULT_IRREDUCIBILITY_MAX,
    cap: int = DEFAULT_TRUNCATION_CAP,
) -> SingularCurve:
    if not 1 <= n <= dn_max:
        raise InvalidInputError(f"n must lie in [1, {dn_max}], got {n}")
    d = d_sequence(n + 1)
    a, b = d[n - 1], d[n + 1]
    v = MonomialValuation(a, b)
    target = a * b
    logger.info(f"🔧 Constructing D_{n} | degree={d[n]}, weights={v.weights}")

    kernel = forms_with_order(d[n], v, target)
    if len(kernel) != 1:
        raise LemmaViolationError(
            f"degree {d[n]} forms of order >= {target} under {v.weights} form a space of "
            f"dimension {len(kernel)}, expected exactly 1"
        )
    curve = kernel[0]

    series = localize(curve, b)
    polygon = series.newton_polygon()
    vertex = series.coefficient((0, a))
    if vertex == 0:
        raise LemmaViolationError(f"D_{n} has no w^{a} term at the node")
    curve = curve.scale(1 / vertex)

    weighted = vweight(v, curve, cap)
    if weighted.order != target:
        raise LemmaViolationError(f"D_{n} has order {weighted.order}, expected {target}")
    expected = ((b, 0), (0, a))
    if polygon.vertices != expected:
        raise LemmaViolationError(f"D_{n} has Newton polygon {polygon.vertices}, expected {expected}")

    if n <= irreducibility_max:
        if not irreducibility_certificate(curve, v, target):
            raise LemmaViolationError(f"D_{n} failed its irreducibility certificate")
        irreducible, provenance = True, "verified"
    else:
        irreducible, provenance = True, "cited"
    logger.info(f"✅ D_{n} constructed | ord={weighted.order}, irreducibility={provenance}")
    return SingularCurve(n, curve, v.weights, weighted.order, len(kernel), polygon, irreducible, provenance)


def d_prime_route(n: int, dn_max: int = DEFAULT_DN_MAX, cap: int = DEFAULT_TRUNCATION_CAP) -> dict:
    """D_n under the weights (d_n**2, d_(n+1)**2): order d_(n+1) d_n**2 and self-intersection 0."""
    curve = construct_Dn(n, dn_max, cap=cap)
    d = d_sequence(n + 1)
    weights = (d[n] ** 2, d[n + 1] ** 2)
    if math.gcd(*weights) != 1:
        raise LemmaViolationError(f"weights {weights} are not coprime")
    weighted = ord_on_weights(curve.form, weights, cap)
    return {"n": n, "weights": weights, "ord": weighted.order, "curve": curve}
