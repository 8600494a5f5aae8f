from fractions import Fraction

import pytest

from nodal_kstab.exactnum import UPPER_THRESHOLD, Ordering, quad_cmp
from nodal_kstab.exceptions import InvalidInputError
from nodal_kstab.nodal_catalog import breakpoint, breakpoints, d_sequence, fibonacci


def test_first_terms():
    assert d_sequence(6).values == (1, 1, 2, 5, 13, 34, 89)


def test_identities_hold_far_out():
    sequence = d_sequence(30)
    assert sequence.identity_failures() == []
    assert all(sequence[n] == fibonacci(2 * n - 1) for n in range(31))


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 2), (2, 5), (3, Fraction(13, 2))])
def test_breakpoint(n, expected):
    assert breakpoint(n) == expected


def test_breakpoints_approach_threshold_from_below():
    points = breakpoints(10)
    t10 = points.t[10]
    assert quad_cmp(t10, UPPER_THRESHOLD) is Ordering.LESS
    assert UPPER_THRESHOLD - t10 < Fraction(1, 10 ** 6), "❌ t_10 should be within 1e-6 of the threshold"
    assert points.t_prime[1] == 4


def test_short_sequence_rejected():
    with pytest.raises(InvalidInputError):
        d_sequence(1)


def test_odd_fibonacci_against_sympy():
    sympy = pytest.importorskip("sympy")
    sequence = d_sequence(20)
    assert all(sequence[n] == int(sympy.fibonacci(2 * n - 1)) for n in range(1, 21))
