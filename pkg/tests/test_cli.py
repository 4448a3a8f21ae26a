import json

import pytest

from treelike.cli import main
from treelike.verify import InfeasibleN, run_suite


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_phi(capsys):
    assert run(capsys, "phi", "--code", "1,1,3,2,2,1,4", "--format", "table")[1] == "6275314\n"
    code, out, _ = run(capsys, "phi", "--perm", "6275314")
    assert json.loads(out) == {"code": [1, 3, 2, 2, 1, 4]}


def test_phi_usage_errors(capsys):
    assert run(capsys, "phi")[0] == 2
    assert run(capsys, "phi", "--code", "2,1")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["nonsense"])
    assert e.value.code == 2


def test_generate(capsys):
    _, out, _ = run(capsys, "generate", "--n", "3")
    lines = [json.loads(l) for l in out.splitlines()]
    assert len(lines) == 6
    assert lines[0] == {"rows": [1, 1, 1], "points": [[0, 0], [1, 0], [2, 0]], "code": [1, 1]}


def test_stats_to_file(tmp_path, capsys):
    dest = tmp_path / "report.json"
    assert run(capsys, "stats", "--n", "5", "--out", str(dest))[0] == 0
    rep = json.loads(dest.read_text())
    assert rep["total_oc"] == 120 and rep["variance"] == "3/5"


def test_poly(capsys):
    _, out, _ = run(capsys, "poly", "--n", "3")
    assert json.loads(out)["coeffs"] == [1, 4, 1]
    _, out, _ = run(capsys, "poly", "--family", "Q", "--n", "2")
    assert json.loads(out)["coeffs"] == [4, 0, 4]


def test_pk_corners(capsys):
    _, out, _ = run(capsys, "pk-corners", "--n", "4")
    rows = [json.loads(l) for l in out.splitlines()]
    assert all(r["formula"] == r["enumerated"] for r in rows)
    assert sum(r["formula"] for r in rows) == 24


def test_classes_and_paths(capsys):
    _, out, _ = run(capsys, "classes", "--n", "4")
    recs = [json.loads(l) for l in out.splitlines()]
    assert sum(r["size"] for r in recs) == 24
    assert all(r["size"] == r["paths_below"] == sum(r["oc"]) for r in recs)
    _, out, _ = run(capsys, "paths", "--p", "ENEN")
    assert [b["path"] for b in json.loads(out)["below"]] == ["EENN", "ENEN"]
    assert run(capsys, "paths", "--p", "ENX")[0] == 2


def test_sym(capsys):
    _, out, _ = run(capsys, "sym", "--size", "5", "--check", "all")
    rec = json.loads(out)
    assert rec["count"] == 8 and rec["Q_enum"] == rec["Q_recurrence"] and rec["generators_agree"]
    assert run(capsys, "sym", "--size", "4")[0] == 2


def test_pasep(tmp_path, capsys):
    dest = tmp_path / "dist.json"
    run(capsys, "pasep", "--n", "2", "--out", str(dest))
    assert json.loads(dest.read_text()) == {"00": "1/6", "01": "1/6", "10": "1/2", "11": "1/6"}
    assert run(capsys, "pasep", "--n", "2", "--beta", "2")[0] == 2
    _, out, _ = run(capsys, "pasep", "--n", "2", "--mc", "10000", "--seed", "3")
    assert abs(sum(json.loads(out).values()) - 1) < 1e-12


def test_verify_exit_codes(capsys):
    code, out, err = run(capsys, "verify", "--suite", "theorems", "--n", "4")
    assert code == 0
    assert all(json.loads(l)["status"] == "pass" for l in out.splitlines())
    assert "pass" in err
    assert run(capsys, "verify", "--n", "0")[0] == 2
    assert run(capsys, "verify", "--n", "10")[0] == 2


def test_verify_is_deterministic(capsys):
    a = run(capsys, "verify", "--suite", "all", "--n", "5", "--quiet")[1]
    b = run(capsys, "verify", "--suite", "all", "--n", "5", "--quiet")[1]
    assert a == b


def test_suites():
    assert all(c.status == "pass" for c in run_suite("theorems", 6).checks)
    conj = run_suite("conjectures", 7).checks
    assert all(c.status.startswith("flagged") for c in conj)
    statuses = {c.id: c.status for c in conj}
    assert statuses["conj-corners-7"] == "flagged-match"
    assert statuses["conj-sym-literal-7"] == "flagged-mismatch"
    assert statuses["conj-sym-average-7"] == "flagged-match"
    assert run_suite("bijections", 6).ok and run_suite("pasep", 6).ok
    with pytest.raises(InfeasibleN):
        run_suite("all", 0)
