from fractions import Fraction

import pytest

from nodal_kstab.exactnum import (
    UniSeries,
    binomial_series,
    compose_series,
    invert_series,
    reciprocal_series,
    series_power,
)
from nodal_kstab.exceptions import InvalidInputError


@pytest.mark.parametrize(
    "alpha, expected",
    [
        (Fraction(1, 2), [1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16)]),
        (1, [1, 1, 0, 0]),
        (-1, [1, -1, 1, -1]),
    ],
)
def test_binomial_series(alpha, expected):
    series = binomial_series(alpha, 3)
    assert list(series.coefficients) == expected, f"❌ (1+x)**{alpha} mod x**4 gave {series.coefficients}"


def test_series_power_matches_binomial():
    one_plus_x = UniSeries((1, 1), 6)
    assert series_power(one_plus_x, Fraction(1, 2), 6) == binomial_series(Fraction(1, 2), 6)
    assert series_power(one_plus_x, 3, 6) == UniSeries((1, 3, 3, 1), 6)


def test_reciprocal_is_geometric():
    assert reciprocal_series(UniSeries((1, -1), 4), 4) == UniSeries((1, 1, 1, 1, 1), 4)


@pytest.mark.parametrize(
    "f, expected",
    [
        (UniSeries((0, 1), 4), [0, 1, 0, 0, 0]),
        (UniSeries((0, 1, 1), 4), [0, 1, -1, 2, -5]),
    ],
)
def test_invert_series(f, expected):
    assert list(invert_series(f, 4).coefficients) == expected


def test_inverse_of_truncated_branch():
    f = UniSeries((0, 1, Fraction(1, 2), Fraction(-1, 8)), 3)
    g = invert_series(f, 3)
    assert compose_series(f, g, 3) == UniSeries.identity(3), "❌ f(g(x)) should be x mod x**4"


def test_invert_rejects_zero_linear_term():
    with pytest.raises(InvalidInputError):
        invert_series(UniSeries((0, 0, 1), 3), 3)


@pytest.mark.parametrize("N", [1, 8, 32])
def test_square_root_series_squares_to_one_plus_x(N):
    root = binomial_series(Fraction(1, 2), N)
    assert root * root == UniSeries((1, 1), N), f"❌ ((1+x)**(1/2))**2 != 1+x mod x**{N + 1}"


@pytest.mark.parametrize(
    "f",
    [
        UniSeries((0, 1, 1), 8),
        UniSeries((0, 2, -3, Fraction(1, 5)), 8),
        UniSeries((0, 1, Fraction(1, 2), Fraction(-1, 8), Fraction(1, 16)), 8),
    ],
)
def test_inverse_composes_to_identity_on_both_sides(f):
    g = invert_series(f, 8)
    assert compose_series(f, g, 8) == UniSeries.identity(8), "❌ f(g(x)) should be x"
    assert compose_series(g, f, 8) == UniSeries.identity(8), "❌ g(f(x)) should be x"
