from fractions import Fraction

import pytest

from nodal_kstab.exactnum import (
    SQRT5,
    UPPER_THRESHOLD,
    QuadRational,
    decimal_string,
    format_number,
    parse_number,
)
from nodal_kstab.exceptions import InvalidInputError


@pytest.mark.parametrize(
    "text, expected",
    [
        ("7", Fraction(7)),
        ("-1/2", Fraction(-1, 2)),
        ("sqrt5", SQRT5),
        ("-sqrt5", QuadRational(0, -1)),
        ("7+sqrt5", QuadRational(7, 1)),
        ("3-sqrt5", QuadRational(3, -1)),
        ("7/2+3/2*sqrt5", UPPER_THRESHOLD),
    ],
)
def test_parse_number(text, expected):
    assert parse_number(text) == expected, f"❌ '{text}' parsed as {parse_number(text)!r}"


@pytest.mark.parametrize(
    "value, expected",
    [
        (Fraction(127, 24), "127/24"),
        (Fraction(-3), "-3"),
        (SQRT5, "sqrt5"),
        (UPPER_THRESHOLD, "7/2+3/2*sqrt5"),
        (QuadRational(Fraction(7, 2), Fraction(-3, 2)), "7/2-3/2*sqrt5"),
    ],
)
def test_format_number(value, expected):
    assert format_number(value) == expected
    assert parse_number(expected) == value


@pytest.mark.parametrize("text", ["", "abc", "1/0", "1.5", "2*sqrt7"])
def test_parse_rejects(text):
    with pytest.raises(InvalidInputError):
        parse_number(text)


def test_decimal_string():
    assert decimal_string(Fraction(127, 24)) == "5.291666666667"
    assert decimal_string(SQRT5) == "2.236067977500"
    assert decimal_string(Fraction(-1, 3), digits=3) == "-0.333"
