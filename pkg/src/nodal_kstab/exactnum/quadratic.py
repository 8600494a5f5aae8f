"""Exact arithmetic in Q(sqrt 5).

Values are kept as the canonical pair (p, q) meaning p + q*sqrt5, so equality
and hashing are structural. Comparisons never touch floating point: the sign
of p + q*sqrt5 is decided by a sign case analysis and, when p and q disagree,
a single comparison of p**2 against 5*q**2.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from nodal_kstab.exactnum.rational import as_rational, sign


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True, eq=False)
class QuadRational:
    p: Fraction
    q: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "p", as_rational(self.p))
        object.__setattr__(self, "q", as_rational(self.q))

    # -- structure -----------------------------------------------------
    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def to_rational(self) -> Fraction:
        if self.q != 0:
            raise ValueError(f"{self!r} is irrational")
        return self.p

    def conjugate(self) -> "QuadRational":
        return QuadRational(self.p, -self.q)

    def norm(self) -> Fraction:
        return self.p * self.p - 5 * self.q * self.q

    def sign(self) -> int:
        return _sign_of(self.p, self.q)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QuadRational(self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __neg__(self):
        return QuadRational(-self.p, -self.q)

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QuadRational(self.p - o.p, self.q - o.q)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return QuadRational(self.p * o.p + 5 * self.q * o.q, self.p * o.q + self.q * o.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        num = self * o.conjugate()
        return QuadRational(num.p / n, num.q / n)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return QuadRational(1) / (self ** (-exponent))
        result = QuadRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- comparison ----------------------------------------------------
    def __eq__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.p == o.p and self.q == o.q

    def __hash__(self):
        if self.q == 0:
            return hash(self.p)
        return hash((self.p, self.q))

    def __lt__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return quad_cmp(self, o) is Ordering.LESS

    def __le__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return quad_cmp(self, o) is not Ordering.GREATER

    def __gt__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return quad_cmp(self, o) is Ordering.GREATER

    def __ge__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return quad_cmp(self, o) is not Ordering.LESS

    def __repr__(self):
        return f"QuadRational({self.p}, {self.q})"


Exact = Union[Fraction, QuadRational]


def _coerce(value) -> Union[QuadRational, None]:
    if isinstance(value, QuadRational):
        return value
    if isinstance(value, Fraction) or (isinstance(value, int) and not isinstance(value, bool)):
        return QuadRational(value)
    return None


def _sign_of(p: Fraction, q: Fraction) -> int:
    sp, sq = sign(p), sign(q)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # p and q of opposite signs: |p| against |q|*sqrt5 by squaring
    return sp * sign(p * p - 5 * q * q)


def quad_cmp(x, y) -> Ordering:
    """Exact ordering of two elements of Q(sqrt5) under the real embedding."""
    a, b = _coerce(x), _coerce(y)
    if a is None or b is None:
        raise TypeError("quad_cmp expects int, Fraction or QuadRational operands")
    return Ordering(_sign_of(a.p - b.p, a.q - b.q))


def as_quad(value) -> QuadRational:
    q = _coerce(value)
    if q is None:
        raise TypeError(f"cannot convert {type(value).__name__} to QuadRational")
    return q


def simplify(value) -> Exact:
    """Collapse a rational QuadRational to a plain Fraction."""
    if isinstance(value, QuadRational):
        return value.p if value.q == 0 else value
    return as_rational(value)


def floor_exact(value) -> int:
    """floor(p + q*sqrt5) using integer square roots only."""
    x = as_quad(value)
    den = x.p.denominator * x.q.denominator // math.gcd(x.p.denominator, x.q.denominator)
    a = x.p.numerator * (den // x.p.denominator)
    b = x.q.numerator * (den // x.q.denominator)
    if b == 0:
        return a // den
    s = math.isqrt(5 * b * b)
    if b > 0:
        return (a + s) // den
    return (a - s - 1) // den


SQRT5 = QuadRational(0, 1)
PHI_SQUARED = QuadRational(Fraction(3, 2), Fraction(1, 2))
UPPER_THRESHOLD = QuadRational(Fraction(7, 2), Fraction(3, 2))
LOWER_THRESHOLD = QuadRational(Fraction(7, 2), Fraction(-3, 2))
