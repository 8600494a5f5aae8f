import random
from fractions import Fraction

import pytest

from nodal_kstab.exactnum import (
    LOWER_THRESHOLD,
    PHI_SQUARED,
    SQRT5,
    UPPER_THRESHOLD,
    Ordering,
    QuadRational,
    floor_exact,
    quad_cmp,
    simplify,
)


@pytest.mark.parametrize(
    "x, y, expected",
    [
        (LOWER_THRESHOLD, 0, Ordering.GREATER),
        (UPPER_THRESHOLD, UPPER_THRESHOLD, Ordering.EQUAL),
        (SQRT5, Fraction(9, 4), Ordering.LESS),
        (QuadRational(0, -1), Fraction(-9, 4), Ordering.GREATER),
        (QuadRational(Fraction(1, 2), 1), QuadRational(3), Ordering.LESS),
    ],
)
def test_quad_cmp(x, y, expected):
    assert quad_cmp(x, y) is expected, f"❌ {x} vs {y} should be {expected.name}"


def test_quad_cmp_agrees_with_fraction_order_on_rationals():
    rng = random.Random(5)
    for _ in range(1000):
        x = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
        y = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
        expected = Ordering((x > y) - (x < y))
        assert quad_cmp(QuadRational(x, 0), QuadRational(y, 0)) is expected, f"❌ {x} vs {y}"
        assert quad_cmp(x, QuadRational(y)) is expected


def test_threshold_identities():
    assert PHI_SQUARED * PHI_SQUARED == UPPER_THRESHOLD, "❌ phi**4 should be (7+3*sqrt5)/2"
    assert UPPER_THRESHOLD * LOWER_THRESHOLD == 1, "❌ the thresholds should be reciprocal"
    assert UPPER_THRESHOLD + LOWER_THRESHOLD == 7


def test_division_and_powers():
    x = QuadRational(2, 1)
    assert (x / x) == 1
    assert x ** -1 == QuadRational(-2, 1), "❌ 1/(2+sqrt5) should be sqrt5-2"
    with pytest.raises(ZeroDivisionError):
        x / QuadRational(0)


@pytest.mark.parametrize(
    "value, expected",
    [(SQRT5, 2), (-SQRT5, -3), (UPPER_THRESHOLD, 6), (LOWER_THRESHOLD, 0), (Fraction(-7, 2), -4)],
)
def test_floor_exact(value, expected):
    assert floor_exact(value) == expected, f"❌ floor({value}) should be {expected}"


def test_simplify_and_hash():
    value = simplify(QuadRational(3, 0))
    assert isinstance(value, Fraction) and value == 3
    assert hash(QuadRational(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert simplify(SQRT5) is SQRT5
