"""Analytic branches of the nodal cubic at its node and localization of forms.

In the chart x = x1/x0, y = x2/x0 the cubic reads y**2 = x**2 (1 + x). With
phi(x) = x (1 + x)**(1/2) the branches are z = y - phi(x), w = y + phi(x) and
the cubic localizes to exactly z*w. Back-substitution uses u = (w - z)/2,
x = psi(u) with psi the compositional inverse of phi, and y = (z + w)/2.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Tuple

from nodal_kstab.exceptions import InvalidInputError, LemmaViolationError
from nodal_kstab.exactnum.series import UniSeries, series_power
from nodal_kstab.local_model.bivariate import BivariateSeries, Monomial
from nodal_kstab.local_model.forms import Form
from nodal_kstab.utils.logger import get_logger

logger = get_logger(__name__)

_PSI_POWERS: Dict[int, List[UniSeries]] = {}


def _generalized_binomial(alpha: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out = out * (alpha - i) / (i + 1)
    return out


def branch_parametrization(N: int) -> UniSeries:
    """phi(x) = x * (1 + x)**(1/2) mod x**(N+1)."""
    root = series_power(UniSeries((1, 1), N), Fraction(1, 2), N)
    return UniSeries.identity(N) * root


@lru_cache(maxsize=64)
def branch_inverse(N: int) -> UniSeries:
    """psi with phi(psi(u)) = u mod u**(N+1).

    Closed form from Lagrange inversion: psi_k = C(-k/2, k-1) / k.
    """
    if N < 0:
        raise InvalidInputError(f"truncation must be >= 0, got {N}")
    coeffs = [Fraction(0)]
    for k in range(1, N + 1):
        coeffs.append(_generalized_binomial(Fraction(-k, 2), k - 1) / k)
    psi = UniSeries(tuple(coeffs), N)

    # phi(psi) = psi * (1 + psi)**(1/2)
    check = psi * series_power(UniSeries.constant(1, N) + psi, Fraction(1, 2), N)
    if check != UniSeries.identity(N):
        raise LemmaViolationError(f"branch inverse failed phi(psi(u)) = u at order {N}")
    logger.debug(f"✅ Branch inverse verified | order={N}")
    return psi


def psi_powers(N: int, top: int) -> List[UniSeries]:
    """[psi**0, ..., psi**top] mod u**(N+1), shared across calls with equal N."""
    powers = _PSI_POWERS.get(N)
    if powers is None:
        powers = [UniSeries.constant(1, N)]
        _PSI_POWERS[N] = powers
    psi = branch_inverse(N)
    while len(powers) <= top:
        powers.append(powers[-1] * psi)
    return powers


@lru_cache(maxsize=None)
def _conversion_row(p: int, k: int) -> Tuple[Fraction, ...]:
    """Coefficients of z**i w**(p+k-i) in u**p y**k = (w - z)**p (z + w)**k / 2**(p+k)."""
    denominator = 2 ** (p + k)
    row = []
    for i in range(p + k + 1):
        total = 0
        for r in range(max(0, i - k), min(p, i) + 1):
            total += comb(p, r) * (-1) ** r * comb(k, i - r)
        row.append(Fraction(total, denominator))
    return tuple(row)


def _z_range(degree: int, weights: Optional[Tuple[int, int]], bound: int) -> range:
    """z exponents i with a*i + b*(degree - i) < bound."""
    if weights is None:
        return range(degree + 1)
    a, b = weights
    lo, hi = 0, degree
    if a == b:
        return range(degree + 1) if a * degree < bound else range(0)
    # a*i + b*(degree - i) = (a - b)*i + b*degree
    slack = bound - b * degree
    if a > b:
        # i < slack / (a - b)
        hi = min(hi, -((-slack) // (a - b)) - 1)
    else:
        # i > -slack / (b - a)
        lo = max(lo, (-slack) // (b - a) + 1)
    return range(lo, hi + 1) if lo <= hi else range(0)


def localize(
    form: Form, N: int, weights: Optional[Tuple[int, int]] = None
) -> BivariateSeries:
    """Taylor expansion of form(1, x, y) in (z, w), exact through total degree N.

    With ``weights`` = (a, b) only terms below the certified weight
    min(a, b) * (N + 1) are kept.
    """
    if N < 0:
        raise InvalidInputError(f"truncation must be >= 0, got {N}")
    poly = form.dehomogenize()
    top = max((j for j, _ in poly), default=0)
    powers = psi_powers(N, top)
    bound = min(weights) * (N + 1) if weights is not None else 0

    out: Dict[Monomial, Fraction] = {}
    for (j, k), c in poly.items():
        psi_j = powers[j]
        for p in range(j, N - k + 1):
            cp = psi_j[p]
            if cp == 0:
                continue
            coeff = c * cp
            degree = p + k
            row = _conversion_row(p, k)
            for i in _z_range(degree, weights, bound):
                r = row[i]
                if r:
                    key = (i, degree - i)
                    out[key] = out.get(key, Fraction(0)) + coeff * r
    return BivariateSeries(out, N, weights)


def multiplicity_at_node(form: Form) -> int:
    """Order of vanishing of the form at [1:0:0]."""
    if form.is_zero:
        raise InvalidInputError("the zero form has no multiplicity")
    return min(j + k for j, k in form.dehomogenize())
