"""Text syntax shared by the CLI and every report.

Rationals are written ``p/q`` (``p`` when integral), quadratic values
``p/q+r/s*sqrt5``; no whitespace, ``-`` allowed in numerators.
"""
import re
from fractions import Fraction
from typing import Union

from nodal_kstab.exceptions import InvalidInputError
from nodal_kstab.exactnum.quadratic import QuadRational, as_quad, floor_exact, simplify

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_QUAD_RE = re.compile(
    r"^(?:(?P<p>[+-]?\d+(?:/\d+)?)(?=[+-]))?"
    r"(?P<sign>[+-])?(?P<q>\d+(?:/\d+)?)?\*?sqrt5$"
)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise InvalidInputError(f"zero denominator in number '{text}'")


def parse_number(text: str) -> Union[Fraction, QuadRational]:
    text = text.strip()
    if _RATIONAL_RE.match(text):
        return _rational(text)
    m = _QUAD_RE.match(text)
    if not m or "sqrt5" not in text:
        raise InvalidInputError(
            f"cannot parse number '{text}'; expected p/q or p/q+r/s*sqrt5"
        )
    p = _rational(m.group("p")) if m.group("p") else Fraction(0)
    q = _rational(m.group("q")) if m.group("q") else Fraction(1)
    if m.group("sign") == "-":
        q = -q
    return simplify(QuadRational(p, q))


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_number(value) -> str:
    x = as_quad(value)
    if x.q == 0:
        return _format_rational(x.p)
    q_text = "" if abs(x.q) == 1 else f"{_format_rational(abs(x.q))}*"
    if x.p == 0:
        return f"{'-' if x.q < 0 else ''}{q_text}sqrt5"
    return f"{_format_rational(x.p)}{'+' if x.q > 0 else '-'}{q_text}sqrt5"


def decimal_string(value, digits: int = 12) -> str:
    """Round-half-up decimal rendering; presentation only."""
    scale = 10 ** digits
    n = floor_exact(as_quad(value) * scale + Fraction(1, 2))
    sign = "-" if n < 0 else ""
    whole, frac = divmod(abs(n), scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"
