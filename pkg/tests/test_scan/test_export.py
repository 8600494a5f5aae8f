from fractions import Fraction

import importlib

import pytest

from nodal_kstab.exceptions import EmitterError
from nodal_kstab.scan import ScanConfig, cache_roundtrip, emit_csv, emit_svg, scan


@pytest.fixture(scope="module")
def report():
    return scan(ScanConfig(Fraction(1), Fraction(13, 2), Fraction(1, 4)))


def test_csv_bytes_identical_for_same_config(tmp_path, report):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    emit_csv(report, first)
    emit_csv(scan(ScanConfig(Fraction(1), Fraction(13, 2), Fraction(1, 4))), second)
    assert first.read_bytes() == second.read_bytes(), "❌ CSV should be byte-deterministic"


def test_svg_has_two_breakpoint_markers(report):
    assert emit_svg(report).count('id="breakpoint-') == 2


def test_cache_roundtrip_is_structurally_equal(tmp_path, report):
    assert cache_roundtrip(report, tmp_path) == report


def test_unwritable_path_reports_path(tmp_path, report):
    target = tmp_path / "missing" / "scan.csv"
    with pytest.raises(EmitterError) as info:
        emit_csv(report, target)
    assert str(target) in str(info.value)


def test_failed_cache_write_leaves_no_temp_file(tmp_path, monkeypatch, report):
    def refuse(src, dst):
        raise OSError("disk full")

    monkeypatch.setattr(importlib.import_module("nodal_kstab.scan.cache").os, "replace", refuse)
    with pytest.raises(EmitterError):
        cache_roundtrip(report, tmp_path)
    assert list(tmp_path.glob("*.tmp")) == [], "❌ a failed write must remove its temp file"
    assert list(tmp_path.glob("*.json")) == []
