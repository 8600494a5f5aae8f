from fractions import Fraction

import pytest

from nodal_kstab.exactnum import invert_series
from nodal_kstab.local_model import (
    NODAL_CUBIC,
    X0,
    X1,
    X2,
    branch_inverse,
    branch_parametrization,
    localize,
    multiplicity_at_node,
)


def test_cubic_localizes_to_branch_product():
    series = localize(NODAL_CUBIC, 8)
    assert series.coefficients == {(1, 1): 1}, f"❌ C should localize to z*w, got {series.to_json()}"


def test_unit_localizes_to_constant():
    assert localize(X0 ** 3, 4).coefficients == {(0, 0): 1}


def test_line_expansion():
    series = localize(X1 + X2, 2)
    assert series.coefficients == {
        (0, 1): 1,
        (2, 0): Fraction(-1, 8),
        (1, 1): Fraction(1, 4),
        (0, 2): Fraction(-1, 8),
    }


def test_weight_window_drops_heavy_terms():
    series = localize(X1 + X2, 2, weights=(1, 2))
    # certified below min(a, b) * (N + 1) = 3
    assert series.coefficients == {(0, 1): 1, (2, 0): Fraction(-1, 8)}


def test_newton_polygons():
    assert localize(X1 + X2, 2).newton_polygon().vertices == ((2, 0), (0, 1))
    assert localize(NODAL_CUBIC, 4).newton_polygon().vertices == ((1, 1),)


@pytest.mark.parametrize("N", [1, 5, 12])
def test_branch_inverse_matches_lagrange_inversion(N):
    assert branch_inverse(N) == invert_series(branch_parametrization(N), N)


def test_branch_inverse_against_sympy():
    sympy = pytest.importorskip("sympy")
    u = sympy.symbols("u")
    N = 8
    psi = sum(sympy.Rational(c.numerator, c.denominator) * u ** k for k, c in enumerate(branch_inverse(N).coefficients))
    phi_of_psi = sympy.series(psi * sympy.sqrt(1 + psi), u, 0, N + 1).removeO()
    assert sympy.expand(phi_of_psi - u) == 0, "❌ phi(psi(u)) should be u"


def test_multiplicity_at_node():
    assert multiplicity_at_node(NODAL_CUBIC) == 2
    assert multiplicity_at_node(X0 ** 2) == 0
    assert multiplicity_at_node(X1 * X2) == 2
