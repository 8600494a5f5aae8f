from nodal_kstab.exactnum.quadratic import (
    LOWER_THRESHOLD,
    PHI_SQUARED,
    SQRT5,
    UPPER_THRESHOLD,
    Exact,
    Ordering,
    QuadRational,
    as_quad,
    floor_exact,
    quad_cmp,
    simplify,
)
from nodal_kstab.exactnum.rational import Rational, as_rational
from nodal_kstab.exactnum.series import (
    UniSeries,
    binomial_series,
    compose_series,
    invert_series,
    reciprocal_series,
    series_power,
)
from nodal_kstab.exactnum.text import decimal_string, format_number, parse_number

__all__ = [
    "Exact",
    "LOWER_THRESHOLD",
    "Ordering",
    "PHI_SQUARED",
    "QuadRational",
    "Rational",
    "SQRT5",
    "UPPER_THRESHOLD",
    "UniSeries",
    "as_quad",
    "as_rational",
    "binomial_series",
    "compose_series",
    "decimal_string",
    "floor_exact",
    "format_number",
    "invert_series",
    "parse_number",
    "quad_cmp",
    "reciprocal_series",
    "series_power",
    "simplify",
]
