"""Command-line front end: verbs, exit codes, deterministic reports."""

import json

import pytest

from schurinterp.cli import dispatch

GOLDEN_PROBLEM = {
    "nodes": [
        {"z": [0.0, 0.0], "values": [[1.0, 0.0]]},
        {"z": [0.5, 0.0], "values": [[0.5, 0.0]]},
    ],
    "kappa": 1,
}


@pytest.fixture()
def problem_file(tmp_path):
    path = tmp_path / "problem.json"
    path.write_text(json.dumps(GOLDEN_PROBLEM))
    return str(path)


def run(capsys, argv):
    code = dispatch(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerbs:
    def test_analyze(self, capsys, problem_file):
        code, out, _ = run(capsys, ["analyze", "--problem", problem_file])
        assert code == 0
        report = json.loads(out)
        assert report["inertia"] == [1, 1, 0]
        assert report["min_kappa"] == 1

    def test_theta_selfcheck_report(self, capsys, problem_file):
        code, out, _ = run(capsys, ["theta", "--problem", problem_file])
        assert code == 0
        report = json.loads(out)
        assert report["selfcheck"]["zeros_theta11"] == 1
        assert report["selfcheck"]["zeros_theta22"] == 1

    def test_solve_with_constant_parameter(self, capsys, problem_file):
        code, out, _ = run(
            capsys, ["solve", "--problem", problem_file, "--param-e", "const:0.5"]
        )
        assert code == 0
        report = json.loads(out)
        assert report["admissible"] is True
        assert report["verdict"]["pass"] is True

    def test_verify_rejects_identity(self, capsys, problem_file):
        code, out, _ = run(
            capsys, ["verify", "--problem", problem_file, "--f", "identity"]
        )
        assert code == 1
        assert json.loads(out)["verdict"]["pass"] is False

    def test_classify_identity_parameter(self, capsys, problem_file):
        code, out, _ = run(
            capsys, ["classify", "--problem", problem_file, "--param-s", "identity"]
        )
        assert code == 0
        report = json.loads(out)
        assert report["m"] == [1, 0]
        assert report["predicted_index"] == 0

    def test_decompose_identity(self, capsys, problem_file):
        code, out, _ = run(
            capsys, ["decompose", "--problem", problem_file, "--f", "identity"]
        )
        assert code == 0
        assert json.loads(out)["h_index"] == 1

    def test_omega_identity_is_member(self, capsys, problem_file):
        code, out, _ = run(
            capsys,
            ["omega", "--problem", problem_file, "--kappa", "1", "--f", "identity"],
        )
        assert code == 0
        report = json.loads(out)
        assert report["agree"] is True

    def test_selftest(self, capsys):
        code, out, _ = run(capsys, ["selftest"])
        assert code == 0
        assert json.loads(out)["pass"] is True


class TestExitCodes:
    def test_missing_file_is_an_input_error(self, capsys, tmp_path):
        code, _, err = run(
            capsys, ["analyze", "--problem", str(tmp_path / "missing.json")]
        )
        assert code == 2 and "error" in err

    def test_bad_parameter_spec(self, capsys, problem_file):
        code, _, err = run(
            capsys, ["solve", "--problem", problem_file, "--param-e", "nonsense:1"]
        )
        assert code == 2

    def test_unknown_verb(self, capsys):
        code, _, _ = run(capsys, ["frobnicate"])
        assert code == 2


class TestDeterminism:
    def test_byte_identical_reports(self, capsys, problem_file):
        _, out1, _ = run(capsys, ["analyze", "--problem", problem_file])
        _, out2, _ = run(capsys, ["analyze", "--problem", problem_file])
        assert out1 == out2

    def test_solve_reports_are_reproducible(self, capsys, problem_file):
        argv = ["solve", "--problem", problem_file, "--param-e", "const:0.5"]
        _, out1, _ = run(capsys, argv)
        _, out2, _ = run(capsys, argv)
        assert out1 == out2
