"""Truncated univariate power series with exact rational coefficients.

Every operation takes the truncation order explicitly; results are exact
modulo x**(N+1).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from nodal_kstab.exceptions import InvalidInputError, LemmaViolationError
from nodal_kstab.exactnum.rational import IntOrRational, as_rational


@dataclass(frozen=True)
class UniSeries:
    coefficients: Tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise InvalidInputError(f"truncation order must be >= 0, got {self.order}")
        coeffs = tuple(as_rational(c) for c in self.coefficients)[: self.order + 1]
        coeffs = coeffs + (Fraction(0),) * (self.order + 1 - len(coeffs))
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_iterable(cls, coefficients: Iterable[IntOrRational], order: int) -> "UniSeries":
        return cls(tuple(coefficients), order)

    @classmethod
    def identity(cls, order: int) -> "UniSeries":
        return cls((0, 1), order)

    @classmethod
    def constant(cls, value: IntOrRational, order: int) -> "UniSeries":
        return cls((value,), order)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k <= self.order:
            return self.coefficients[k]
        return Fraction(0)

    def truncate(self, order: int) -> "UniSeries":
        return UniSeries(self.coefficients, min(order, self.order))

    def valuation(self):
        for k, c in enumerate(self.coefficients):
            if c != 0:
                return k
        return None

    def __add__(self, other: "UniSeries") -> "UniSeries":
        n = min(self.order, other.order)
        return UniSeries(tuple(self[k] + other[k] for k in range(n + 1)), n)

    def __sub__(self, other: "UniSeries") -> "UniSeries":
        n = min(self.order, other.order)
        return UniSeries(tuple(self[k] - other[k] for k in range(n + 1)), n)

    def __neg__(self) -> "UniSeries":
        return UniSeries(tuple(-c for c in self.coefficients), self.order)

    def scale(self, factor: IntOrRational) -> "UniSeries":
        f = as_rational(factor)
        return UniSeries(tuple(f * c for c in self.coefficients), self.order)

    def __mul__(self, other: "UniSeries") -> "UniSeries":
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        a, b = self.coefficients, other.coefficients
        for i in range(n + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return UniSeries(tuple(out), n)

    def compose(self, inner: "UniSeries") -> "UniSeries":
        return compose_series(self, inner, min(self.order, inner.order))


def compose_series(f: UniSeries, g: UniSeries, N: int) -> UniSeries:
    """f(g(x)) mod x**(N+1); requires g(0) = 0."""
    if g[0] != 0:
        raise InvalidInputError("inner series of a composition must vanish at 0")
    if f.order < N or g.order < N:
        raise InvalidInputError(
            f"cannot compose to order {N} from series known to orders {f.order} and {g.order}"
        )
    g = g.truncate(N)
    result = UniSeries.constant(f[N], N)
    for k in range(N - 1, -1, -1):
        result = result * g + UniSeries.constant(f[k], N)
    return result


def binomial_series(alpha: IntOrRational, N: int) -> UniSeries:
    """(1 + x)**alpha with coefficient k equal to C(alpha, k)."""
    if N < 0:
        raise InvalidInputError(f"truncation order must be >= 0, got {N}")
    alpha = as_rational(alpha)
    coeffs = [Fraction(1)]
    for k in range(1, N + 1):
        coeffs.append(coeffs[-1] * (alpha - k + 1) / k)
    return UniSeries(tuple(coeffs), N)


def series_power(f: UniSeries, alpha: IntOrRational, N: int) -> UniSeries:
    """f**alpha for f(0) = 1 via the power recurrence, O(N**2)."""
    if f[0] != 1:
        raise InvalidInputError("series_power needs a series with constant term 1")
    alpha = as_rational(alpha)
    out = [Fraction(1)]
    for k in range(1, N + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            fj = f[j]
            if fj:
                acc += ((alpha + 1) * j - k) * fj * out[k - j]
        out.append(acc / k)
    return UniSeries(tuple(out), N)


def reciprocal_series(f: UniSeries, N: int) -> UniSeries:
    if f[0] == 0:
        raise InvalidInputError("reciprocal of a series with zero constant term")
    inv0 = 1 / f[0]
    out = [inv0]
    for k in range(1, N + 1):
        acc = sum((f[j] * out[k - j] for j in range(1, k + 1) if f[j]), Fraction(0))
        out.append(-acc * inv0)
    return UniSeries(tuple(out), N)


def invert_series(f: UniSeries, N: int) -> UniSeries:
    """Compositional inverse g with f(g(x)) = x mod x**(N+1).

    Lagrange inversion: g_k = [x**(k-1)] (x / f(x))**k / k. The result is
    checked by composing back on both sides before it is returned.
    """
    if N < 0:
        raise InvalidInputError(f"truncation order must be >= 0, got {N}")
    if f[0] != 0:
        raise InvalidInputError("invert_series needs f(0) = 0")
    if f[1] == 0:
        raise InvalidInputError("invert_series needs a nonzero linear coefficient")
    if f.order < N:
        raise InvalidInputError(f"series known to order {f.order} cannot be inverted to order {N}")

    # x / f(x) = 1 / (f_1 + f_2 x + ...)
    shifted = UniSeries(tuple(f[k + 1] for k in range(N + 1)), N)
    h = reciprocal_series(shifted, N)
    coeffs = [Fraction(0)]
    power = UniSeries.constant(1, N)
    for k in range(1, N + 1):
        power = power * h
        coeffs.append(power[k - 1] / k)
    g = UniSeries(tuple(coeffs), N)

    identity = UniSeries.identity(N)
    if compose_series(f, g, N) != identity or compose_series(g, f, N) != identity:
        raise LemmaViolationError(f"series inversion failed its composition check at order {N}")
    return g
