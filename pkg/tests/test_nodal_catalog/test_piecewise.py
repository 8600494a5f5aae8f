from fractions import Fraction

import pytest

from nodal_kstab.exactnum import SQRT5, QuadRational
from nodal_kstab.exceptions import InvalidInputError
from nodal_kstab.nodal_catalog import (
    A_invariant,
    S_exact,
    beyond_threshold_value,
    boundary_limit,
    breakpoint,
    locate_piece,
    piece_value,
)


@pytest.mark.parametrize(
    "t, expected",
    [
        (Fraction(1), 2),
        (Fraction(5), Fraction(9, 2)),
        (Fraction(7), Fraction(127, 24)),
        (Fraction(1, 2), Fraction(3, 2)),
        (Fraction(3), Fraction(7, 2)),
    ],
)
def test_S_exact(t, expected):
    assert S_exact(t) == expected, f"❌ S({t}) = {S_exact(t)}, expected {expected}"


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pieces_agree_at_breakpoints(n):
    t = breakpoint(n)
    assert piece_value(n - 1, t) == piece_value(n, t)


def test_reflection():
    t = Fraction(2, 7)
    assert S_exact(t) == t * S_exact(1 / t)


@pytest.mark.parametrize("t, expected", [(1, 2), (7, 8), (Fraction(1, 2), Fraction(3, 2))])
def test_A_invariant(t, expected):
    assert A_invariant(t) == expected


def test_locate_piece():
    assert locate_piece(1) == 0
    assert locate_piece(Fraction(5)) == 2
    assert locate_piece(QuadRational(4, 1)) == 2
    with pytest.raises(InvalidInputError):
        locate_piece(7)


def test_irrational_slope_beyond_threshold():
    t = QuadRational(7, 1)
    assert S_exact(t) == beyond_threshold_value(t)


def test_boundary_limit():
    limit = boundary_limit()
    assert limit["agree"]
    assert limit["formula_at_threshold"] == 3 + SQRT5


@pytest.mark.parametrize("t", [0, -1, Fraction(-1, 2)])
def test_nonpositive_slope_rejected(t):
    with pytest.raises(InvalidInputError):
        S_exact(t)
