from fractions import Fraction

import pytest

from nodal_kstab.exactnum import UPPER_THRESHOLD, QuadRational
from nodal_kstab.nodal_catalog import classify


@pytest.mark.parametrize(
    "t, fg, fano, piece, text",
    [
        (Fraction(1), True, True, 0, "P(1,1,1)"),
        (Fraction(3, 2), True, True, 0, "P(1,1,1)"),
        (Fraction(3, 4), True, True, 0, "P(1,1,1)"),
        (QuadRational(Fraction(1, 2), Fraction(1, 2)), True, True, 0, "P(1,1,1)"),
        (Fraction(3), True, True, 1, "P(1,1,4)"),
        (Fraction(5), True, True, 2, "x0x3 = x1^5 + x2 in P(1,1,5,4)"),
        (Fraction(2), True, True, 1, "x0x3 = x1^2 + x2 in P(1,1,2,1)"),
        (QuadRational(4, 1), True, True, 2, "P(1,4,25)"),
        (Fraction(22, 3), True, False, None, None),
        (QuadRational(7, 1), False, False, None, None),
        (UPPER_THRESHOLD, False, False, None, None),
    ],
)
def test_verdicts(t, fg, fano, piece, text):
    verdict = classify(t)
    assert (verdict.fg, verdict.fano, verdict.piece) == (fg, fano, piece), f"❌ wrong verdict at t={t}: {verdict}"
    if text is None:
        assert verdict.degeneration is None
    else:
        assert verdict.degeneration.to_text() == text


def test_reflected_slope():
    verdict = classify(Fraction(1, 3))
    assert verdict.reflected and verdict.fg and verdict.fano
    assert verdict.degeneration.to_text() == "P(1,1,4)"


def test_verdict_json():
    payload = classify(Fraction(3)).to_json()
    assert payload["t"] == "3"
    assert payload["degeneration"]["weights"] == [1, 1, 4]
    assert payload["provenance"] == "theorem"
