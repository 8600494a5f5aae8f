import json

import pytest

from nodal_kstab.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    status = main(list(argv))
    return status, capsys.readouterr().out


def test_s_exact(capsys):
    status, out = run(capsys, "s-exact", "--t", "7")
    payload = json.loads(out)
    assert status == EXIT_OK
    assert payload["kind"] == "s_exact" and payload["schema_version"] == 1
    assert payload["S"] == "127/24"
    assert payload["A"] == "8"


def test_s_exact_irrational(capsys):
    status, out = run(capsys, "s-exact", "--t", "7+sqrt5")
    assert status == EXIT_OK
    assert "sqrt5" in json.loads(out)["t"]


def test_classify(capsys):
    status, out = run(capsys, "classify", "--t", "5")
    payload = json.loads(out)
    assert status == EXIT_OK
    assert payload["degeneration"]["text"] == "x0x3 = x1^5 + x2 in P(1,1,5,4)"


def test_invariants(capsys):
    status, out = run(capsys, "invariants", "--a", "1", "--b", "7")
    payload = json.loads(out)
    assert status == EXIT_OK
    assert (payload["T"], payload["epsilon"], payload["S"]) == ("8", "63/8", "127/24")


def test_dseq(capsys):
    status, out = run(capsys, "dseq", "--n", "6")
    payload = json.loads(out)
    assert payload["values"] == [1, 1, 2, 5, 13, 34, 89]
    assert payload["breakpoints"][:3] == ["1", "2", "5"]


def test_curve_csv(capsys):
    status, out = run(capsys, "curve", "--n", "1", "--format", "csv")
    assert status == EXIT_OK
    assert out.splitlines() == ["e0,e1,e2,coefficient", "0,1,0,1", "0,0,1,1"]


def test_sm_table(capsys):
    status, out = run(capsys, "sm-table", "--a", "1", "--b", "1", "--m-max", "2")
    rows = json.loads(out)["rows"]
    assert [(r["m"], r["S_m"], r["T_m"]) for r in rows] == [(1, "2", "3"), (2, "2", "3")]


def test_scan_svg_to_file(capsys, tmp_path):
    out_file = tmp_path / "scan.svg"
    status, out = run(
        capsys, "scan", "--t-min", "1", "--t-max", "13/2", "--step", "1/4", "--format", "svg", "--out", str(out_file)
    )
    assert status == EXIT_OK
    assert out == ""
    assert out_file.read_text(encoding="utf-8").count('id="breakpoint-') == 2


def test_scan_with_cache_dir(capsys, tmp_path):
    args = ("scan", "--t-min", "1", "--t-max", "3", "--step", "1/2", "--format", "csv", "--cache-dir", str(tmp_path))
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second
    assert len(list(tmp_path.glob("*.json"))) == 1


def test_failed_rows_exit_two(capsys, monkeypatch):
    monkeypatch.setenv("NODAL_KSTAB_TRUNCATION_CAP", "1")
    status, out = run(capsys, "scan", "--t-min", "1", "--t-max", "2", "--step", "1/2", "--mode", "sample")
    assert status == EXIT_FAILURE
    assert all(row["flags"] == "E" for row in json.loads(out)["rows"])


def test_delta(capsys):
    status, out = run(capsys, "delta", "--t-min", "7", "--t-max", "10", "--step", "1")
    assert status == EXIT_OK
    assert json.loads(out)["minimum"] == "192/127"


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["s-exact"],
        ["s-exact", "--t", "abc"],
        ["s-exact", "--t", "-1"],
        ["dseq", "--n", "1"],
        ["scan", "--t-min", "2", "--t-max", "1", "--step", "1"],
        ["classify", "--t", "3", "--format", "xml"],
        ["classify", "--t", "3", "--jobs", "0"],
    ],
)
def test_usage_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE, f"❌ {argv} should be a usage error"


def test_unsupported_format_for_kind(capsys):
    assert main(["classify", "--t", "3", "--format", "svg"]) == EXIT_FAILURE
