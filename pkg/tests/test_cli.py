import csv
import io
import json
import subprocess
import sys


from symfeec.cli import main, resolve_alias, run_command
from symfeec.recursion import ABasisResult
from symfeec.spaces import SpaceSpec
from symfeec.symmetry import InvarianceCertificate


def run(*argv):
    data, code, err = run_command(list(argv))
    return data.decode(), code, err


def test_dim():
    out, code, _ = run("dim", "--family", "P", "-r", "1", "-k", "1", "-n", "2")
    assert (out, code) == ("6\n", 0)
    out, code, _ = run("dim", "--family", "P", "-r", "1", "-k", "1", "-n", "2", "--format", "json")
    assert json.loads(out)["dimension"] == 6


def test_real_invariance_fails_for_triangle_constants():
    out, code, _ = run("invariance", "--family", "P", "-r", "0", "-k", "1", "-n", "2", "--mode", "R")
    assert code == 1 and out.startswith("not invariant")
    out, code, _ = run("invariance", "--family", "P", "-r", "0", "-k", "1", "-n", "2", "--mode", "C")
    assert code == 0


def test_invariance_of_spanning_family_and_basis():
    out, code, _ = run("invariance", "--family", "P", "-r", "2", "-k", "1", "-n", "2",
                       "--set", "S", "--mode", "R", "--format", "json")
    assert code == 0 and json.loads(out)["invariant"] is True
    _, code, _ = run("invariance", "--family", "P", "-r", "2", "-k", "1", "-n", "2", "--set", "B")
    assert code in (0, 1)


def test_certificate_report_round_trip():
    out, code, _ = run("invariance", "--family", "P", "-r", "1", "-k", "1", "-n", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    cert = InvarianceCertificate.from_json(data["certificate"])
    assert cert.real
    assert all("chi_decimal" in m for m in data["certificate"]["matches"])


def test_vc_alias():
    out, code, _ = run("vc-alias", "--name", "BDM", "-r", "2", "-n", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["spec"] == {"family": "P", "ring": False, "r": 2, "k": 2, "n": 3}
    assert data["predicted_real"] is True
    assert resolve_alias("RT", 1, 2) == SpaceSpec("Pminus", False, 1, 1, 2)
    assert resolve_alias("Ned1st", 1, 3) == SpaceSpec("Pminus", False, 1, 1, 3)
    assert resolve_alias("Ned2nd", 3, 3) == SpaceSpec("P", False, 3, 1, 3)
    _, code, err = run("vc-alias", "--name", "Ned1st", "-r", "1", "-n", "2")
    assert code == 2 and "tetrahedron" in err


def test_vc_alias_build():
    out, code, _ = run("vc-alias", "--name", "RT", "-r", "2", "-n", "2", "--build")
    assert code == 0 and "built C_only" in out


def test_empty_space_report():
    out, code, _ = run("basis", "--family", "Pminus", "--ring", "-r", "1", "-k", "1", "-n", "2",
                       "--format", "json")
    assert code == 0 and json.loads(out)["count"] == 0


def test_build_report_round_trip():
    out, code, _ = run("build-invariant", "--family", "Pminus", "-r", "2", "-k", "1", "-n", "2")
    assert code == 0
    res = ABasisResult.from_json(json.loads(out))
    assert res.classification == "C_only" and len(res.basis) == 8


def test_degree_table_csv():
    out, code, _ = run("build-invariant", "--family", "P", "-k", "1", "-n", "3", "--r-max", "10",
                       "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    real = {int(r["r"]) for r in rows if r["classified"] == "R"}
    assert real == {0, 1, 2, 4, 5, 8}
    assert all(r["agree"] == "True" for r in rows)


def test_degree_table_disagreement_exits_one():
    _, code, _ = run("build-invariant", "--family", "P", "--ring", "-k", "1", "-n", "3", "--r-max", "3")
    assert code == 1


def test_not_monomial_reports_chain():
    out, code, _ = run("build-invariant", "--family", "P", "-r", "5", "-k", "1", "-n", "4",
                       "--format", "json")
    data = json.loads(out)
    assert code == 1 and data["error"] == "NotMonomial"
    assert data["chain"][-1] == {"family": "P", "ring": False, "r": 0, "k": 1, "n": 4}


def test_usage_errors():
    assert run("dim", "--family", "P", "-r", "1", "-k", "9", "-n", "2")[1] == 2
    assert run("frobnicate")[1] == 2
    assert run("dim", "--family", "Q", "-r", "1", "-k", "1", "-n", "2")[1] == 2
    _, code, err = run("dim", "--family", "P", "-r", "1", "-k", "1", "-n", "2", "--format", "csv")
    assert code == 2 and "csv" in err
    _, code, err = run("verify", "nonsense")
    assert code == 2 and "unknown suite" in err


def test_degree_cap(monkeypatch):
    monkeypatch.setenv("SYMFEEC_MAX_DEGREE", "3")
    _, code, err = run("build-invariant", "--family", "P", "-r", "4", "-k", "1", "-n", "2")
    assert code == 2 and "SYMFEEC_MAX_DEGREE" in err


def test_output_is_deterministic():
    argv = ["build-invariant", "--family", "P", "-r", "2", "-k", "1", "-n", "3"]
    assert run_command(argv)[0] == run_command(argv)[0]


def test_out_file(tmp_path):
    target = tmp_path / "dim.json"
    data, code, _ = run_command(["dim", "--family", "P", "-r", "2", "-k", "0", "-n", "2",
                                 "--format", "json", "--out", str(target)])
    assert code == 0 and data == b""
    assert json.loads(target.read_text())["dimension"] == 6
    _, code, err = run_command(["dim", "--family", "P", "-r", "2", "-k", "0", "-n", "2",
                                "--out", str(tmp_path / "missing" / "x")])
    assert code == 2 and err.startswith("error")


def test_verify_single_suite():
    out, code, _ = run("verify", "signed-bases-3d")
    assert code == 0 and out.rstrip().endswith("== signed-bases-3d: PASS")


def test_main_writes_stdout(capsys):
    assert main(["dim", "--family", "P", "-r", "1", "-k", "1", "-n", "2"]) == 0
    assert capsys.readouterr().out == "6\n"
    assert main(["dim"]) == 2
    assert capsys.readouterr().err.startswith("usage")


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "symfeec.cli", "dim", "--family", "Pminus", "-r", "1", "-k", "1", "-n", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "3\n"
