import json
from fractions import Fraction

import pytest

from nodal_kstab.emitters import dispatch_emit, list_plugins
from nodal_kstab.exceptions import EmitterError, SchemaValidationError
from nodal_kstab.nodal_catalog import classify
from nodal_kstab.scan import ScanConfig, scan
from nodal_kstab.validators.schema_validator import validate_report


@pytest.fixture(scope="module")
def scan_payload():
    return scan(ScanConfig(Fraction(1), Fraction(13, 2), Fraction(1, 4))).to_json()


def verdict_payload():
    return {"schema_version": 1, "kind": "verdict", **classify(Fraction(3)).to_json()}


def test_builtin_plugins_discovered():
    assert {"csv", "json", "svg"} <= set(list_plugins())


def test_csv_rows(scan_payload):
    text = dispatch_emit(scan_payload, "csv")
    lines = text.splitlines()
    assert lines[0] == "t,A,S,ratio,flags,S_decimal"
    assert lines[1] == "1,2,2,1,,2.000000000000"
    assert len(lines) == 1 + len(scan_payload["rows"])


def test_csv_is_deterministic(scan_payload):
    assert dispatch_emit(scan_payload, "csv") == dispatch_emit(scan_payload, "csv")


def test_svg_marks_each_breakpoint(scan_payload):
    svg = dispatch_emit(scan_payload, "svg")
    assert 'viewBox="0 0 800 500"' in svg
    assert svg.count('id="breakpoint-') == 2, "❌ one marker per breakpoint"
    assert svg.count('id="S-curve"') == 1


def test_svg_is_deterministic(scan_payload):
    assert dispatch_emit(scan_payload, "svg") == dispatch_emit(scan_payload, "svg")


def test_json_round_trip(tmp_path):
    payload = verdict_payload()
    out = tmp_path / "verdict.json"
    text = dispatch_emit(payload, "json", out)
    assert json.loads(out.read_text(encoding="utf-8")) == payload
    assert text == out.read_text(encoding="utf-8")


def test_unsupported_combinations():
    with pytest.raises(EmitterError):
        dispatch_emit(verdict_payload(), "svg")
    with pytest.raises(EmitterError):
        dispatch_emit(verdict_payload(), "xml")


@pytest.mark.parametrize(
    "payload",
    [
        {"kind": "scan"},
        {"schema_version": 2, "kind": "verdict"},
        {"schema_version": 1, "kind": "unknown"},
        {"schema_version": 1, "kind": "s_exact", "t": "7", "S": "127/24"},
    ],
)
def test_schema_rejects(payload):
    with pytest.raises(SchemaValidationError):
        validate_report(payload)


def test_schema_accepts_verdict():
    payload = verdict_payload()
    assert validate_report(payload) is payload
