from fractions import Fraction

import pytest

from nodal_kstab.exceptions import InvalidInputError
from nodal_kstab.local_model import NODAL_CUBIC, X0, X1, X2, Form, monomials_of_degree


def test_monomial_order():
    assert monomials_of_degree(1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert len(monomials_of_degree(3)) == 10
    assert monomials_of_degree(2)[0] == (2, 0, 0), "❌ x0**d should come first"


def test_cubic_coefficients():
    assert NODAL_CUBIC.coefficients == {(1, 0, 2): 1, (0, 3, 0): -1, (1, 2, 0): -1}


def test_vector_round_trip():
    form = X0 * X1 - X2 * X2.scale(Fraction(3, 2))
    assert Form.from_vector(2, form.to_vector()) == form


def test_divide_and_multiplicity():
    line = X1 + X2
    product = X0 * line * line
    assert product.divide(line) == X0 * line
    assert product.multiplicity_of(line) == 2
    assert NODAL_CUBIC.divide(line) is None, "❌ the nodal cubic is irreducible"


def test_swap_branches():
    assert NODAL_CUBIC.swap_branches() == NODAL_CUBIC
    assert (X1 + X2).swap_branches() == X1 - X2


def test_mixed_degrees_rejected():
    with pytest.raises(InvalidInputError):
        X0 + X0 * X1
    with pytest.raises(InvalidInputError):
        Form(2, (((1, 0, 0), Fraction(1)),))


def test_to_text():
    assert (X1 + X2).to_text() == "x1 + x2"
    assert NODAL_CUBIC.to_text() == "-x0*x1^2 + x0*x2^2 - x1^3"
    assert (X0 * X1).scale(Fraction(-1, 2)).to_text() == "-1/2*x0*x1"
