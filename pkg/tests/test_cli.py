import json
import subprocess
import sys

import pytest

from polygon_tc.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def lines(text):
    return [json.loads(x) for x in text.splitlines() if x.strip()]


def test_analyze_projective(capsys):
    status, out, _ = run(capsys, "analyze", "--lengths", "1,1,1,1,3")
    rep = json.loads(out)
    assert status == 0
    assert rep["code"] == "5" and rep["special_case"] == "projective"
    assert rep["tc_upper"] == 5 and rep["notes"]


def test_analyze_torus(capsys):
    status, out, _ = run(capsys, "analyze", "--code", "74321")
    rep = json.loads(out)
    assert status == 0 and rep["tc_lower"] == rep["tc_upper"] == 5


def test_analyze_exceptional(capsys):
    _, out, _ = run(capsys, "analyze", "--code", "86321")
    assert json.loads(out)["exceptional"] is True


def test_analyze_target(capsys):
    _, out, _ = run(capsys, "analyze", "--code", "7521", "--target", "7")
    assert json.loads(out)["found"] is False
    status, _, _ = run(capsys, "analyze", "--code", "7521", "--target", "99")
    assert status == 2


def test_exit_codes(capsys):
    assert run(capsys, "analyze", "--code", "8x")[0] == 2
    assert run(capsys, "analyze", "--lengths", "1,1,1,1")[0] == 2
    assert run(capsys, "analyze", "--lengths", "a,b,c")[0] == 2
    assert run(capsys, "analyze", "--code", "532")[0] == 3
    assert run(capsys, "realize", "--code", "87651")[0] == 3


def test_sweep_and_verify_cert(capsys, tmp_path):
    status, out, _ = run(capsys, "sweep", "--n", "6")
    rows = lines(out)
    assert status == 0 and len(rows) == 21
    assert rows[-1] == {"codes": 20, "exceptional": [], "n": 6, "summary": True}
    path = tmp_path / "rows.jsonl"
    path.write_text(out)
    status, out, _ = run(capsys, "verify-cert", str(path))
    assert status == 0
    assert len(out.splitlines()) == 19 and all(x.startswith("OK") for x in out.splitlines())


def test_verify_cert_rejects_tampering(capsys, tmp_path):
    _, out, _ = run(capsys, "analyze", "--code", "8321")
    cert = json.loads(out)["certificate"]
    cert.update(rbar_exp=1, degree=10, bidegree=[5, 5])
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(cert))
    status, out, _ = run(capsys, "verify-cert", str(path))
    assert status == 4 and out.startswith("MISMATCH")
    path.write_text("not json")
    assert run(capsys, "verify-cert", str(path))[0] == 2


def test_sweep_csv_and_range(capsys):
    status, out, _ = run(capsys, "sweep", "--n", "5", "--csv")
    assert status == 0
    assert out.splitlines()[0].startswith("code,n,dims")
    assert run(capsys, "sweep", "--n", "12")[0] == 2
    assert run(capsys, "sweep", "--n", "9")[0] == 2


def test_sweep_is_deterministic_across_jobs(capsys):
    _, one, _ = run(capsys, "sweep", "--n", "7")
    _, four, _ = run(capsys, "sweep", "--n", "7", "--jobs", "4")
    assert one == four
    assert lines(one)[-1]["exceptional"] == ["7321", "7521"]


def test_enumerate_realize_cohomology(capsys):
    _, out, _ = run(capsys, "enumerate", "--n", "6")
    assert len(out.split()) == 20
    _, out, _ = run(capsys, "realize", "--code", "74321")
    assert json.loads(out)["lengths"] == [1, 1, 1, 1, 5, 5, 5]
    _, out, _ = run(capsys, "cohomology", "--code", "8321")
    data = json.loads(out)
    assert data["dims"] == [1, 4, 7, 7, 4, 1]
    assert data["bases"]["5"] == ["R^2 V{1,2,3}"]


def test_verify_suites(capsys):
    status, out, _ = run(capsys, "verify", "table1")
    assert status == 0 and out.startswith("PASS table1")
    status, out, _ = run(capsys, "verify", "size5")
    assert status == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polygon_tc", "analyze", "--code", "74321"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["special_case"] == "torus"
