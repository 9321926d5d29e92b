import json

import pytest

from bruhatpoly.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_interval_text(capsys):
    code, out, err = run_cli(capsys, "interval", "2143", "3241", "--lift")
    assert code == 0
    assert "t: (2,4)" in out or "t=(2,4)" in out
    assert err == ""


def test_interval_json_shape(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "interval", "1324", "2431"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "interval"
    assert doc["inputs"] == {"u": "1324", "v": "2431"}
    assert doc["results"]["size"] == 8


def test_not_comparable_is_domain_error(capsys):
    code, out, err = run_cli(capsys, "interval", "2431", "1324")
    assert code == 3
    assert out == ""
    assert err.startswith("domain error:")


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["interval"])  # missing arguments
    assert exc.value.code == 2


def test_polytope_dim(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "polytope", "1234", "1432", "--dim"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["dimension"] == 2
    assert doc["results"]["partition"] == "|1|234|"


def test_polytope_ineq(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "polytope", "1324", "2431", "--ineq"
    )
    doc = json.loads(out)
    desc = doc["results"]["description"]
    assert len(desc["inequalities"]) == 14
    assert desc["equalities"][0]["rhs"] == 10


def test_polytope_faces_includes_example(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "polytope", "1243", "4132", "--faces"
    )
    doc = json.loads(out)
    assert doc["results"]["f_vector"] == [8, 12, 6, 1]
    assert {"x": "2143", "y": "4132", "dim": 2} in doc["results"]["faces"]


def test_rpoly_golden(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "rpoly", "21345", "53421")
    doc = json.loads(out)
    assert doc["results"]["r"] == (
        "q^8 - 4q^7 + 7q^6 - 8q^5 + 8q^4 - 8q^3 + 7q^2 - 4q + 1"
    )
    assert doc["results"]["coefficients"] == [1, -4, 7, -8, 8, -8, 7, -4, 1]


def test_rpoly_identity(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "rpoly", "1234", "4321", "--generalized", "3,4"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["generalized"]["identity_holds"] is True


def test_rpoly_rejects_non_minimal(capsys):
    code, out, err = run_cli(capsys, "rpoly", "1324", "4231", "--generalized", "2,4")
    assert code == 3
    assert "not inversion-minimal" in err


def test_parabolic_vertices(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "parabolic", "1234", "2413", "--J", "2"
    )
    assert code == 0
    doc = json.loads(out)
    pts = doc["results"]["vertices"]
    assert all(sorted(set(p)) in ([0, 1], [1]) for p in pts)
    assert all(sum(p) == 2 for p in pts)


def test_parabolic_rejects_non_min_rep(capsys):
    code, _, err = run_cli(capsys, "parabolic", "1234", "3142", "--J", "2")
    assert code == 3
    assert "min" in err


def test_check_suite_passes(capsys):
    code, out, _ = run_cli(
        capsys, "--format", "json", "check", "lifting", "--n", "3"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["results"]["pass"] is True


def test_output_is_deterministic(capsys):
    _, out1, _ = run_cli(capsys, "--format", "json", "polytope", "1324", "2431")
    _, out2, _ = run_cli(capsys, "--format", "json", "polytope", "1324", "2431")
    assert out1 == out2
