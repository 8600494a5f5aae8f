from fractions import Fraction

import pytest

from nodal_kstab.exceptions import InvalidInputError
from nodal_kstab.scan import ScanConfig, delta_upper_bound


def test_first_piece_attains_one():
    report = delta_upper_bound(ScanConfig(Fraction(1, 2), Fraction(13, 2), Fraction(1, 4)))
    assert report.minimum == 1
    assert report.argmin == [Fraction(2 + k, 4) for k in range(7)], f"❌ argmin {report.argmin}"


def test_beyond_threshold():
    report = delta_upper_bound(ScanConfig(Fraction(7), Fraction(10), Fraction(1)))
    assert report.minimum == Fraction(192, 127)
    assert report.argmin == [7]


def test_single_point_grid():
    report = delta_upper_bound(ScanConfig(1, 1, 1))
    assert report.minimum == 1 and report.argmin == [1]
    assert report.to_json()["kind"] == "delta"


def test_sample_mode_rejected():
    with pytest.raises(InvalidInputError):
        delta_upper_bound(ScanConfig(1, 2, 1, mode="sample"))
