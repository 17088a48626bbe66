import io
import json
import subprocess
import sys

import pytest

from chevkit import verify
from chevkit.cli import run
from chevkit.data import f4_table_text


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_f4_csv_matches_reference_table():
    code, out, _ = call("table", "--type", "F4", "--orientation", "minus", "--format", "csv")
    assert code == 0
    assert out == f4_table_text()


def test_f4_plus_has_68_rows():
    code, out, _ = call("table", "--type", "F4", "--orientation", "plus", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "alpha,beta,rho_ab,rho_ba,N" and len(lines) == 69


def test_json_schema():
    code, out, _ = call("table", "-t", "C", "-r", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"type", "rank", "orientation", "rows"}
    assert doc["type"] == "C4" and doc["rank"] == 4 and doc["orientation"] == "plus"
    assert {"alpha": "1110", "beta": "1111", "rho_ab": -2, "rho_ba": -4, "N": 2} in doc["rows"]


def test_tsv_and_all_roots():
    code, out, _ = call("table", "-t", "A2", "--roots", "all", "--format", "tsv")
    lines = out.splitlines()
    assert code == 0 and lines[0].split("\t") == ["alpha", "beta", "rho_ab", "rho_ba", "N"]
    assert len(lines) == 1 + 6


def test_a1_table_is_empty():
    code, out, _ = call("table", "--type", "A", "--rank", "1", "--format", "csv")
    assert code == 0 and out == "alpha,beta,rho_ab,rho_ba,N\n"
    code, out, _ = call("table", "--type", "A", "--rank", "1")
    assert code == 0 and "no composable pairs" in out


def test_output_is_deterministic():
    first = call("table", "-t", "E6", "--roots", "all", "--format", "csv")
    second = call("table", "-t", "E6", "--roots", "all", "--format", "csv")
    assert first == second


def test_verify_passes():
    code, out, _ = call("verify", "--type", "B", "--rank", "5", "--suites", "jacobi,threeway")
    assert code == 0 and "all suites passed" in out


def test_verify_json():
    code, out, _ = call("verify", "-t", "G2", "--suites", "golden,structure", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] is True
    assert [r["suite"] for r in doc["reports"]] == ["golden", "structure[G2 plus]", "structure[G2 minus]"]


def test_verify_failure_exits_1(monkeypatch):
    def broken(t, s):
        rep = verify.VerificationReport("broken")
        rep.check(False, "forced", 0, 1)
        return rep

    monkeypatch.setitem(verify.SUITES, "jacobi", broken)
    monkeypatch.setenv("CHEVKIT_THREADS", "1")
    code, out, _ = call("verify", "-t", "A2", "--suites", "jacobi")
    assert code == 1 and "FAILED" in out


@pytest.mark.parametrize(
    "argv,fragment",
    [
        (["table", "--type", "Q4"], "cannot parse"),
        (["table", "--type", "E", "--rank", "9"], "rank 9 invalid"),
        (["table", "--type", "D3", "--rank", "4"], "conflicting"),
        (["table", "--type", "B"], "no rank"),
        (["table", "--type", "A2", "--orientation", "up"], "invalid choice"),
        (["verify", "--type", "A2", "--suites", "jacobi,nope"], "unknown suite"),
        (["verify", "--type", "A2", "--suites", "ccases"], "do not apply"),
        (["cocycle", "--type", "F4"], "not simply laced"),
        (["table"], "required"),
        ([], "required"),
    ],
)
def test_usage_errors_exit_2_with_one_line(argv, fragment):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert err.count("\n") == 1 and fragment in err


def test_cocycle_command():
    code, out, _ = call("cocycle", "-t", "A3", "--kind", "eps0", "--samples", "100", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["cocycles"][0]["generators"] == [[1, 1, 1], [-1, 1, -1], [1, 1, 1]]
    assert doc["cocycles"][0]["flm"]["passed"]
    code, out, _ = call("cocycle", "-t", "D4")
    assert code == 0 and out.count("FLM: pass") == 2


def test_fold_command():
    code, out, _ = call("fold", "--type", "C", "--rank", "3", "--show-lifts")
    assert code == 0 and out.startswith("C3 <- A5")
    code, out, _ = call("fold", "-t", "G2", "--show-lifts", "--format", "json")
    doc = json.loads(out)
    assert doc["cover"] == "D4" and doc["order"] == 3 and len(doc["pairs"]) == 60
    assert all(p["n_lifts"] >= 1 for p in doc["pairs"])


def test_bench_command():
    code, out, _ = call("bench", "-t", "G2")
    assert code == 0 and "constants/s" in out


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "chevkit", "table", "-t", "B2", "--format", "csv"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.splitlines()[1:] == ["10,01,0,-2,1", "10,11,0,-2,2"]
