import json
import os
import subprocess
import sys

import pytest

from liecohom.cli import UsageError, main, parse_algebra, parse_range

DATA = os.path.join(os.path.dirname(__file__), "data")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert parse_range("3") == (3, 3)
    assert parse_range("-2..4") == (-2, 4)
    for bad in ["4..2", "a..b", ""]:
        with pytest.raises(UsageError):
            parse_range(bad)


def test_parse_algebra():
    spec = parse_algebra("H:2|0")
    assert (spec.kind, spec.n, spec.m) == ("H", 1, 0)
    assert parse_algebra("Po:2|1").kind == "Po"
    with pytest.raises(UsageError):
        parse_algebra("H:3|0")
    with pytest.raises(UsageError):
        parse_algebra("no/such/file.json")


def test_compute_both_modes(capsys):
    code, out, _ = run(capsys, "compute", "--algebra", "H:2|0", "--k", "2", "--g", "-2", "--mode", "both")
    assert code == 0
    assert out.count("dim H = 1") == 2
    assert "p'∧q'" in out


def test_compute_json_is_reproducible(capsys, tmp_path):
    path = tmp_path / "r.json"
    args = ["compute", "--algebra", "H:2|0", "--k", "7", "--g", "0", "--format", "json", "--output", str(path)]
    assert main(args) == 0
    first = json.loads(path.read_text())
    assert main(args) == 0
    second = json.loads(path.read_text())
    first["metadata"].pop("timestamp")
    second["metadata"].pop("timestamp")
    assert first == second
    assert first["dim_h"] == 1 and first["metadata"]["version"]


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "--algebra", "H:2|0", "--k", "5", "--g", "-2", "--format", "csv")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.startswith("algebra,field,mode")
    assert row.split(",")[8] == "1"


def test_grid_text(capsys):
    code, out, _ = run(capsys, "grid", "--algebra", "H:2|0", "--k", "1..12", "--g", "-2..1")
    assert code == 0
    assert "nontrivial: H^2_-2, H^5_-2, H^7_0" in out
    for cell in ["22/6/5", "128/10/25", "6/5/2*", "4/4/1"]:
        assert cell in out


def test_grid_json(capsys):
    code, out, _ = run(capsys, "grid", "--algebra", "Po:2|0", "--k", "1..8", "--g", "-4..-2", "--format", "json",
                       "--field", "F2147483647")
    assert code == 0
    doc = json.loads(out)
    assert [6, -4] in doc["nontrivial"] and [8, -2] in doc["nontrivial"]
    assert doc["metadata"]["hint"] is True


def test_check_explicit_file(capsys):
    code, out, _ = run(capsys, "check", "--algebra", os.path.join(DATA, "sl2.json"), "--k", "0..3", "--g", "-2..2")
    assert code == 0 and "all checks passed" in out


def test_check_failure_exit_status(capsys, tmp_path, monkeypatch):
    from liecohom import cli
    from liecohom.engine import CheckResult, SelfTestReport

    monkeypatch.setattr(cli, "self_test", lambda *a, **kw: SelfTestReport("X", [CheckResult("c", False)]))
    code, out, _ = run(capsys, "check", "--algebra", "H:2|0", "--k", "0..1", "--g", "0")
    assert code == 1 and "FAIL" in out


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--algebra", "H:2|0", "--k", "4", "--g", "2")
    assert code == 0
    assert "split" in out and "straightforward" in out and "agree" in out


def test_errors_exit_nonzero(capsys):
    code, _, err = run(capsys, "compute", "--algebra", "X:2|0", "--k", "1", "--g", "0")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "compute", "--algebra", "H:2|0", "--k", "1", "--g", "0", "--field", "F4")
    assert code == 2


def test_bad_algebra_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"basis": []}')
    code, _, err = run(capsys, "compute", "--algebra", str(bad), "--k", "1", "--g", "0")
    assert code == 2 and "empty basis" in err


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "liecohom.cli", "compute", "--algebra", "H:2|0",
                          "--k", "2", "--g", "-2"], capture_output=True, text=True)
    assert out.returncode == 0 and "dim H = 1" in out.stdout
