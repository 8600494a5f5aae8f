from fractions import Fraction

import pytest

from nodal_kstab.exceptions import InvalidInputError
from nodal_kstab.scan import (
    ScanCache,
    ScanConfig,
    ScanReport,
    evaluate_row,
    scan,
    second_differences,
)


def test_exact_scan_finds_both_breakpoints():
    report = scan(ScanConfig(Fraction(1), Fraction(13, 2), Fraction(1, 4)))
    assert [(b.lo, b.hi) for b in report.breakpoints] == [(2, 2), (5, 5)], "❌ kinks should sit exactly at 2 and 5"
    assert all(b.exact for b in report.breakpoints)
    assert [p.slope for p in report.pieces] == [1, Fraction(1, 2), Fraction(2, 5)]
    assert [(p.start, p.end) for p in report.pieces] == [(1, 2), (2, 5), (5, Fraction(13, 2))]
    assert report.violations == []
    assert report.verdict_mismatches == []
    assert report.failed_rows == []


def test_single_piece():
    report = scan(ScanConfig(Fraction(1), Fraction(2), Fraction(1, 4)))
    assert report.breakpoints == []
    assert len(report.pieces) == 1 and report.pieces[0].slope == 1
    assert all("L" in row.flags for row in report.rows[1:-1])


def test_sample_scan_is_concave():
    report = scan(ScanConfig(Fraction(1), Fraction(2), Fraction(1, 2), mode="sample", m=1))
    assert report.failed_rows == []
    assert report.violations == [], "❌ S_1 should satisfy the concavity inequality at 3/2"
    assert report.rows[0].S == 2


def test_failed_rows_are_recorded():
    row = evaluate_row((Fraction(3), "sample", 1, 1))
    assert row.flags == "E"
    assert row.S is None and row.error


def test_second_differences():
    assert second_differences([0, 1, 2, 4]) == [0, 1]
    assert second_differences([1, None, 2, 3]) == [None, None]


@pytest.mark.parametrize(
    "kwargs",
    [
        {"t_min": 2, "t_max": 1, "grid_step": Fraction(1, 4)},
        {"t_min": 0, "t_max": 1, "grid_step": Fraction(1, 4)},
        {"t_min": 1, "t_max": 2, "grid_step": 0},
        {"t_min": 1, "t_max": 2, "grid_step": 1, "mode": "approximate"},
        {"t_min": 1, "t_max": 2, "grid_step": 1, "m": 0},
    ],
)
def test_invalid_configs(kwargs):
    with pytest.raises(InvalidInputError):
        ScanConfig(**kwargs)


def test_scan_needs_an_interval():
    with pytest.raises(InvalidInputError):
        scan(ScanConfig(1, 1, 1))


def test_from_text_rejects_irrational_bounds():
    with pytest.raises(InvalidInputError):
        ScanConfig.from_text("1", "sqrt5", "1/4")


def test_cache_round_trip(tmp_path):
    config = ScanConfig(Fraction(1), Fraction(3), Fraction(1, 2))
    cache = ScanCache(tmp_path)
    first = scan(config, cache=cache)
    assert cache.path_for(config.to_json()).exists()
    second = scan(config, cache=cache)
    assert second.to_json() == first.to_json()


def test_report_json_round_trip():
    report = scan(ScanConfig(Fraction(1), Fraction(13, 2), Fraction(1, 2)))
    payload = report.to_json()
    assert ScanReport.from_json(payload).to_json() == payload
    assert payload["schema_version"] == 1 and payload["kind"] == "scan"
