from fractions import Fraction

import pytest

from nodal_kstab.blowup_geom import invariant_record
from nodal_kstab.nodal_catalog import S_exact, breakpoint, breakpoints, d_sequence


@pytest.mark.parametrize(
    "a, b, witness, S",
    [
        (1, 7, "C", Fraction(127, 24)),
        (1, 1, "D_1", Fraction(2)),
        (1, 2, "D_1", Fraction(3)),
        (2, 1, "sigma(D_1)", Fraction(3, 2)),
    ],
)
def test_invariant_record(a, b, witness, S):
    record = invariant_record(a, b)
    assert record.witness_name == witness, f"❌ ({a}, {b}) should be certified by {witness}"
    assert record.S == S == S_exact(Fraction(b, a))
    assert record.A == Fraction(a + b, a)
    assert record.T * record.epsilon * a * a == 9 * a * b


def test_record_json():
    payload = invariant_record(1, 7).to_json()
    assert payload["S"] == "127/24"
    assert payload["T"] == "8"
    assert payload["witness"] == {"name": "C", "degree": 3, "ord": 8, "self_int": "-1/7"}
    assert payload["provenance"] == "fujita:C:negative:verified"


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_records_at_breakpoints_match_piecewise_formula(n):
    d = d_sequence(n + 1)
    record = invariant_record(d[n - 1], d[n + 1])
    assert record.t == breakpoint(n)
    assert record.S == S_exact(breakpoint(n)), f"❌ S at t_{n} disagrees with the piecewise formula"

    t_prime = breakpoints(n).t_prime[n]
    record = invariant_record(d[n] ** 2, d[n + 1] ** 2)
    assert record.t == t_prime
    assert record.S == S_exact(t_prime), f"❌ S at t'_{n} disagrees with the piecewise formula"


def test_record_at_last_square_breakpoint():
    assert invariant_record(169, 1156).S == Fraction(68, 13)
