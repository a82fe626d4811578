import json

import pytest

from nilpol import catalog
from nilpol.cli import main
from nilpol.free_step2 import build_free_step2
from nilpol.textformat import parse_algebra


@pytest.fixture
def heis_file(tmp_path):
    p = tmp_path / "heis.alg"
    p.write_text("# Heisenberg\ndim 3\n[3,2] = 1*Z1\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_polarize_text(capsys, heis_file):
    code, out, _ = run(capsys, "polarize", heis_file, "--ell", "1,0,0")
    assert code == 0
    assert "(1, 0, 0)  Z1" in out and "(0, 1, 0)  Z2" in out
    assert "dim p = 2" in out and "orbit dim 2d = 2" in out and "verified: yes" in out


@pytest.mark.parametrize("method", ["basic", "refined", "auto"])
def test_polarize_json(capsys, heis_file, method):
    code, out, _ = run(capsys, "polarize", heis_file, "--ell", "1,0,0", "--method", method, "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["p_basis"] == [["1", "0", "0"], ["0", "1", "0"]]
    assert (doc["algebra_dim"], doc["dim_p"], doc["orbit_dim"], doc["verified"]) == (3, 2, 2, True)
    assert doc["method"] == ("refined" if method == "auto" else method)


def test_polarize_trace(capsys, heis_file):
    code, out, _ = run(capsys, "polarize", heis_file, "--ell", "1,0,0", "--method", "basic", "--trace")
    assert "r(ell_1) = span{Z1}" in out
    assert "r(ell_2) = span{Z1, Z2}" in out
    assert "r(ell_3) = span{Z1}" in out


def test_deterministic_output(capsys, heis_file):
    first = run(capsys, "polarize", heis_file, "--ell", "1,2/3,-5", "--json")
    second = run(capsys, "polarize", heis_file, "--ell", "1,2/3,-5", "--json")
    assert first == second


def test_free_step2_emit_round_trip(capsys):
    code, out, _ = run(capsys, "free-step2", "3", "--emit", "-")
    assert code == 0
    assert parse_algebra(out) == build_free_step2(3)[0]


def test_free_step2_emit_file(capsys, tmp_path):
    target = tmp_path / "f4.alg"
    code, _, _ = run(capsys, "free-step2", "4", "--emit", str(target))
    assert code == 0 and parse_algebra(target.read_text()) == build_free_step2(4)[0]
    code, out, _ = run(capsys, "validate", str(target))
    assert code == 0 and "center dim 6" in out


def test_polarize_free(capsys):
    code, out, _ = run(capsys, "polarize-free", "3", "--ell", "1,2,3,0,0,0")
    assert code == 0
    assert "Z3 + 3*Z1 - 2*Z2" in out
    assert "dim p = 5" in out


def test_polarize_free_fallback(capsys):
    code, out, err = run(capsys, "polarize-free", "3", "--ell", "0,2,3,0,0,0", "--json")
    assert code == 0
    assert "falling back" in err
    doc = json.loads(out)
    assert doc["method"] == "basic" and doc["verified"]


def test_verify_command(capsys, heis_file):
    code, out, _ = run(capsys, "verify", heis_file, "--ell", "1,0,0", "--basis", "1,0,0;0,1,0")
    assert code == 0
    code, out, _ = run(capsys, "verify", heis_file, "--ell", "1,0,0", "--basis", "0,1,0;0,0,1", "--json")
    doc = json.loads(out)
    assert code == 1
    assert doc["is_isotropic"] is False
    assert any(w["condition"] == "isotropy" and w["value"] == "-1" for w in doc["witnesses"])


def test_catalog_command(capsys):
    code, out, _ = run(capsys, "catalog", "--list")
    assert code == 0 and out.split() == catalog.names()
    code, out, _ = run(capsys, "catalog", "--show", "filiform5")
    assert parse_algebra(out) == catalog.get("filiform5").algebra
    code, _, err = run(capsys, "catalog", "--show", "nope")
    assert code == 1


def test_catalog_reference(capsys):
    code, out, _ = run(capsys, "polarize", "catalog:filiform4", "--ell", "1,0,0,0", "--json")
    assert code == 0 and json.loads(out)["dim_p"] == 3


def test_batch(capsys, tmp_path, heis_file):
    ells = tmp_path / "ells.txt"
    ells.write_text("1,0,0\n# skip me\n0,0,0\n\n0,1,1\n")
    code, out, _ = run(capsys, "batch", heis_file, "--ells", str(ells), "--json")
    assert code == 0
    docs = [json.loads(line) for line in out.splitlines()]
    assert [d["ell"] for d in docs] == [["1", "0", "0"], ["0", "0", "0"], ["0", "1", "1"]]
    assert [d["dim_p"] for d in docs] == [2, 3, 3]


def test_batch_bad_line(capsys, tmp_path, heis_file):
    ells = tmp_path / "ells.txt"
    ells.write_text("1,0,0\n1,0\n")
    code, out, err = run(capsys, "batch", heis_file, "--ells", str(ells))
    assert code == 2 and "line 2" in err and "verified: yes" in out


@pytest.mark.parametrize(
    "text, code, needle",
    [
        ("dim 3\n[3,2] = Z1\n[2,3] = Z1\n", 1, "antisymmetry"),
        ("dim 5\n[4,3] = Z2\n[5,2] = Z1\n", 1, "Jacobi identity"),
        ("dim 3\n[3,2] = Z3\n", 1, "strong Malcev"),
        ("dim 4\n[4,2] = Z1\n", 1, "center"),
        ("dim 2\n[1,2] = 1/0*Z1\n", 2, "zero denominator"),
    ],
)
def test_validate_errors(capsys, tmp_path, text, code, needle):
    p = tmp_path / "bad.alg"
    p.write_text(text)
    got, _, err = run(capsys, "validate", str(p))
    assert got == code
    assert needle in err


def test_stdin(capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("dim 3\n[3,2] = Z1\n"))
    code, out, _ = run(capsys, "polarize", "-", "--ell", "1,0,0")
    assert code == 0 and "dim p = 2" in out


def test_arity_error_exit_code(capsys, heis_file):
    code, _, err = run(capsys, "polarize", heis_file, "--ell", "1,0")
    assert code == 2 and "entries" in err


def test_internal_breach_exit_code(capsys, heis_file, monkeypatch):
    from nilpol import cli
    from nilpol.linalg import Subspace
    from nilpol.vergne import Method, PolarizationResult

    monkeypatch.setattr(cli, "polarize", lambda g, ell, m: PolarizationResult(Subspace.full(3), 2, Method.basic))
    code, _, err = run(capsys, "polarize", heis_file, "--ell", "1,0,0")
    assert code == 3 and "internal error" in err
