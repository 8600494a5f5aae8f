from fractions import Fraction

import pytest

from nodal_kstab.exceptions import (
    InfiniteValuationError,
    InvalidInputError,
    TruncationExhaustedError,
)
from nodal_kstab.local_model import (
    NODAL_CUBIC,
    X0,
    X1,
    X2,
    Form,
    MonomialValuation,
    colength,
    localize,
    monomials_of_degree,
    multiplicity_at_node,
    required_truncation,
    vweight,
)


@pytest.mark.parametrize(
    "weights, form, expected",
    [
        ((1, 1), NODAL_CUBIC, 2),
        ((1, 2), X1 + X2, 2),
        ((1, 7), NODAL_CUBIC, 8),
        ((2, 1), X1 - X2, 2),
        ((3, 5), X0 ** 3, 0),
        ((1, 2), (X1 + X2) ** 3, 6),
    ],
)
def test_vweight(weights, form, expected):
    result = vweight(MonomialValuation(*weights), form)
    assert result.order == expected, f"❌ ord_{weights}({form.to_text()}) = {result.order}, expected {expected}"
    assert result.value == Fraction(expected, weights[0])


def test_zero_form_has_infinite_value():
    with pytest.raises(InfiniteValuationError):
        vweight(MonomialValuation(1, 1), Form.zero(3))


def test_exhausted_truncation_is_an_error():
    with pytest.raises(TruncationExhaustedError) as info:
        vweight(MonomialValuation(1, 2), X1 + X2, cap=1)
    assert info.value.truncation == 1


@pytest.mark.parametrize("weights", [(2, 4), (0, 1), (-1, 2), (True, 1)])
def test_invalid_weights(weights):
    with pytest.raises(InvalidInputError):
        MonomialValuation(*weights)


def test_slope_round_trip():
    v = MonomialValuation.from_slope(Fraction(3, 2))
    assert v == MonomialValuation(2, 3)
    assert v.slope == Fraction(3, 2)
    assert v.swapped() == MonomialValuation(3, 2)
    assert v.log_discrepancy == 5


def test_required_truncation_covers_cubic_orders():
    v = MonomialValuation(1, 2)
    assert required_truncation(v, 3) == 6


@pytest.mark.parametrize(
    "weights, p, expected",
    [((1, 5), 5, 5), ((2, 13), 26, 20), ((3, 7), 0, 0), ((1, 1), 3, 6)],
)
def test_colength(weights, p, expected):
    assert colength(MonomialValuation(*weights), p) == expected


@pytest.mark.parametrize("exponent", monomials_of_degree(3))
def test_toric_order_is_the_multiplicity_for_every_cubic_monomial(exponent):
    monomial = Form.monomial(exponent)
    order = vweight(MonomialValuation(1, 1), monomial).order
    assert order == multiplicity_at_node(monomial), f"❌ chart disagrees with the multiplicity on {monomial.to_text()}"


@pytest.mark.parametrize(
    "weights, form",
    [
        ((1, 2), X1 + X2),
        ((1, 7), NODAL_CUBIC),
        ((2, 5), (X1 + X2) ** 2 - X0 * X2),
        ((3, 8), X1 * X2 ** 2 + X0 ** 2 * X2),
    ],
)
def test_certified_order_survives_deeper_truncation(weights, form):
    v = MonomialValuation(*weights)
    result = vweight(v, form)
    deeper = localize(form, 2 * result.truncation, v.weights)
    assert deeper.weighted_order(v.a, v.b) == result.order, f"❌ ord under {weights} changed on deepening"


@pytest.mark.parametrize("weights", [(1, 2), (2, 3), (3, 7), (1, 5)])
@pytest.mark.parametrize("p", [0, 1, 6, 13, 40])
def test_colength_is_symmetric_in_the_weights(weights, p):
    a, b = weights
    assert colength(MonomialValuation(a, b), p) == colength(MonomialValuation(b, a), p)
