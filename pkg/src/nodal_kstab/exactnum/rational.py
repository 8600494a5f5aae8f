from fractions import Fraction
from typing import Union

# Fraction keeps numerator/denominator in lowest terms with a positive denominator.
Rational = Fraction

IntOrRational = Union[int, Fraction]


def as_rational(value: IntOrRational) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)
