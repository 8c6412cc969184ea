import csv
import io
import json
import re
import subprocess
import sys
from fractions import Fraction as F

import pytest

from symspec.cli import from_jsonable, main, to_jsonable

FLOAT = re.compile(r"\d\.\d|\de[-+]?\d")


def run(capsys, *argv):
    try:
        status = main(list(argv))
    except SystemExit as exc:
        status = exc.code
    out = capsys.readouterr()
    return status, out.out, out.err


def test_table_text(capsys):
    status, out, _ = run(capsys, "table")
    assert status == 0
    row = next(line for line in out.splitlines() if line.startswith("F4/Spin(9)"))
    assert "2/3" in row and "short" in row
    assert not FLOAT.search(out)


def test_table_json_matches_expected(capsys):
    status, out, _ = run(capsys, "table", "--format", "json")
    assert status == 0
    rows = from_jsonable(json.loads(out))["results"]
    assert len(rows) == 16
    for r in rows:
        assert r["eigenvalue"] == r["expected_eigenvalue"]
        assert isinstance(r["eigenvalue"], F)
        assert r["isotropy_class"] == r["expected_class"]
    raw = json.loads(out)["results"][0]["eigenvalue"]
    assert raw == {"num": "1", "den": "1"}


def test_table_csv_has_sixteen_rows(capsys):
    status, out, _ = run(capsys, "table", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert status == 0 and len(rows) == 16
    assert {r["eigenvalue"] for r in rows} == {"1", "3/5", "3/4", "2/3"}


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["eigenvalue", "B:grassmannian", "--params", "p=3,q=0"], "3/5"),
        (["eigenvalue", "C:quaternionic", "--params", "p=1,q=1", "--which", "functions"], "2/3"),
        (["eigenvalue", "F4:spin9", "--which", "functions"], "2/3"),
    ],
)
def test_eigenvalue(capsys, argv, expected):
    status, out, _ = run(capsys, *argv, "--format", "json")
    assert status == 0
    assert from_jsonable(json.loads(out))["results"]["eigenvalue"] == F(expected)


def test_eigenvalue_functions_reports_witness(capsys):
    status, out, _ = run(capsys, "eigenvalue", "G2:so4", "--which", "functions", "--format", "json")
    res = from_jsonable(json.loads(out))["results"]
    assert status == 0 and res["eigenvalue"] == F(7, 6)
    assert res["witness_fundamental"] and res["relation"] == "lambda_greater"


def test_exhausted_cutoff_exits_one(capsys):
    status, out, err = run(capsys, "eigenvalue", "G2:so4", "--which", "functions", "--cutoff", "11/10")
    assert status == 1
    assert "11/10" in out + err


def test_branch_f4(capsys):
    status, out, _ = run(capsys, "branch", "F4:spin9", "--weight", "0,0,0,1", "--format", "json")
    assert status == 0
    res = json.loads(out)["results"]
    got = {tuple(c["labels"]): c["multiplicity"] for c in res["constituents"]}
    assert got == {(0, 0, 0, 0): 1, (0, 0, 0, 1): 1, (1, 0, 0, 0): 1}
    assert res["dimension"] == 26


def test_branch_trivial_and_so5(capsys):
    status, out, _ = run(capsys, "branch", "E7:su8", "--weight", "0,0,0,0,0,0,0", "--format", "json")
    res = json.loads(out)["results"]
    assert status == 0 and [c["multiplicity"] for c in res["constituents"]] == [1]
    # adjoint of so(5) is 2 w_2 in Bourbaki labels
    status, out, _ = run(capsys, "branch", "B:grassmannian", "--params", "p=1,q=1", "--weight", "0,2", "--format", "json")
    res = json.loads(out)["results"]
    assert status == 0
    assert sum(c["dimension"] * c["multiplicity"] for c in res["constituents"]) == 10


def test_weights_dump(capsys):
    status, out, _ = run(capsys, "weights", "G2", "--weight", "0,1", "--format", "json")
    res = from_jsonable(json.loads(out))["results"]
    assert status == 0 and res["dimension"] == 14


@pytest.mark.parametrize(
    "argv",
    [
        ["table", "--format", "xml"],
        ["eigenvalue", "Z:nothing"],
        ["eigenvalue", "A:grassmannian", "--params", "p=4,q=1"],
        ["eigenvalue", "A:grassmannian", "--params", "p=two"],
        ["branch", "F4:spin9", "--weight", "0,0,-1,0"],
        ["branch", "F4:spin9", "--weight", "0,0,1"],
        ["weights", "Q7", "--weight", "1"],
        ["eigenvalue", "F4:spin9", "--cutoff", "abc"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    status, _, err = run(capsys, *argv)
    assert status == 2
    assert err


@pytest.mark.parametrize("scope", ["identities", "catalog"])
def test_verify_scopes(capsys, scope):
    status, out, _ = run(capsys, "verify", scope, "--format", "json")
    res = json.loads(out)["results"]
    assert status == 0 and not res["failed"] and res["passed"] > 0


def test_verify_catalog_counts_sixteen_eigenvalues(capsys):
    _, out, _ = run(capsys, "verify", "catalog", "--format", "json")
    checks = json.loads(out)["results"]["checks"]
    eig = [c for c in checks if "eigenvalue" in c["check"]]
    assert len(eig) == 16 and all(c["ok"] for c in eig)


def test_json_round_trip():
    record = {"x": F(3, 5), "v": [F(1, 2), F(-7, 3)], "n": 4, "s": "text"}
    assert from_jsonable(json.loads(json.dumps(to_jsonable(record)))) == record


def test_deterministic_subprocess_output():
    cmd = [sys.executable, "-m", "symspec", "table", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and not FLOAT.search(a.decode())


def test_list(capsys):
    status, out, _ = run(capsys, "list")
    assert status == 0 and len(out.strip().splitlines()) == 16
