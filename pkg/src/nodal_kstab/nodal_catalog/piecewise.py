"""The exact S-invariant of v_t and the log discrepancy A(v_t) = 1 + t."""
from __future__ import annotations

from fractions import Fraction
from typing import Union

from nodal_kstab.exceptions import InvalidInputError
from nodal_kstab.exactnum.quadratic import (
    PHI_SQUARED,
    UPPER_THRESHOLD,
    Exact,
    QuadRational,
    as_quad,
    simplify,
)
from nodal_kstab.nodal_catalog.sequence import breakpoint, d_sequence

Number = Union[int, Fraction, QuadRational]


def _positive(t: Number) -> QuadRational:
    q = as_quad(t)
    if q.sign() <= 0:
        raise InvalidInputError(f"slope must be positive, got {t}")
    return q


def locate_piece(t: Number) -> int:
    """n with t_n <= t < t_(n+1), for 1 <= t below the upper threshold."""
    q = _positive(t)
    if q < 1 or q >= UPPER_THRESHOLD:
        raise InvalidInputError(f"{t} lies outside [1, (7+3*sqrt5)/2)")
    n = 0
    while q >= breakpoint(n + 1):
        n += 1
    return n


def piece_value(n: int, t: Number) -> Exact:
    """d_(n+1)/d_n + (d_n/d_(n+1)) t, the formula on [t_n, t_(n+1)]."""
    d = d_sequence(max(n + 1, 2))
    return simplify(Fraction(d[n + 1], d[n]) + Fraction(d[n], d[n + 1]) * as_quad(t))


def beyond_threshold_value(t: Number) -> Exact:
    """(t**2 + 11t + 1) / (3(t + 1)), valid for t >= (7+3*sqrt5)/2."""
    q = as_quad(t)
    return simplify((q * q + 11 * q + 1) / (3 * (q + 1)))


def S_exact(t: Number) -> Exact:
    q = _positive(t)
    if q < 1:
        return simplify(q * as_quad(S_exact(1 / q)))
    if q >= UPPER_THRESHOLD:
        return beyond_threshold_value(q)
    return piece_value(locate_piece(q), q)


def A_invariant(t: Number) -> Exact:
    """Log discrepancy of the normalized valuation v_t."""
    return simplify(1 + _positive(t))


def boundary_limit() -> dict:
    """Limit of the piecewise values at t_n against the formula at the threshold.

    d_(n+1)/d_n tends to phi**2, so the piecewise values tend to
    phi**2 + L/phi**2 with L = (7+3*sqrt5)/2 = phi**4.
    """
    piecewise = simplify(PHI_SQUARED + UPPER_THRESHOLD / PHI_SQUARED)
    formula = beyond_threshold_value(UPPER_THRESHOLD)
    return {
        "piecewise_limit": piecewise,
        "formula_at_threshold": formula,
        "agree": piecewise == formula,
    }
