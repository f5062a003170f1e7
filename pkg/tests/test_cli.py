import json

import numpy as np
import pytest

from opineq import cli, linalg

NILPOTENT = np.array([[0, 1], [0, 0]], dtype=complex)


@pytest.fixture
def nilpotent_file(tmp_path):
    path = tmp_path / "nilp.json"
    linalg.save_matrix(path, NILPOTENT)
    return str(path)


@pytest.fixture
def scaled_nilpotent_file(tmp_path):
    path = tmp_path / "nilp10.json"
    linalg.save_matrix(path, 10.0 * NILPOTENT)
    return str(path)


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestRadius:
    def test_nilpotent_values(self, capsys, nilpotent_file):
        code, out, _ = run_cli(capsys, "radius", nilpotent_file, "--tol", "1e-8")
        assert code == 0
        data = json.loads(out)
        est = data["numerical_radius"]
        assert abs(est["value"] - 0.5) <= 1e-8
        assert est["hi"] - est["lo"] <= 1e-8
        assert abs(data["spectral_radius"]) <= 1e-10
        assert abs(data["operator_norm"] - 1.0) <= 1e-10

    def test_with_grid_oracle(self, capsys, nilpotent_file):
        code, out, _ = run_cli(capsys, "radius", nilpotent_file,
                               "--grid-oracle", "4096")
        data = json.loads(out)
        assert code == 0
        assert abs(data["grid_oracle"]["value"] - 0.5) <= 1e-6


class TestCheck:
    def test_hypothesis_failure_exit_1(self, capsys, tmp_path):
        path = tmp_path / "notpsd.json"
        linalg.save_matrix(path, np.array([[1, 2], [2, -3]], dtype=complex))
        code, _, err = run_cli(capsys, "check", str(path), "--ineq", "SCHWARZ_POS")
        assert code == 1
        assert "HypothesisViolated" in err

    def test_printed_mode_violation_exit_2(self, capsys, scaled_nilpotent_file):
        # the deliberate-violation fixture: the printed bound fails on 10*A
        code, out, _ = run_cli(capsys, "check", scaled_nilpotent_file,
                               "--ineq", "DRAGOMIR_BUZANO_PRINTED")
        assert code == 2
        data = json.loads(out)
        assert data["violation_rows"]
        assert data["worst"]["satisfied"] is False
        assert data["worst"]["lhs"] == pytest.approx(25.0, rel=1e-8)
        assert data["worst"]["rhs_values"][0] == pytest.approx(5.0, rel=1e-8)

    def test_corrected_mode_holds_exit_0(self, capsys, scaled_nilpotent_file):
        code, out, _ = run_cli(capsys, "check", scaled_nilpotent_file,
                               "--ineq", "DRAGOMIR_BUZANO_CORRECTED")
        assert code == 0
        assert not json.loads(out)["violation_rows"]

    def test_vector_entry_runs_samples(self, capsys, nilpotent_file):
        code, out, _ = run_cli(capsys, "check", nilpotent_file,
                               "--ineq", "KATO", "--alpha", "0.5")
        assert code == 0
        assert json.loads(out)["rows_checked"] == 9  # 8 samples + sup pass

    def test_unknown_id(self, capsys, nilpotent_file):
        code, _, err = run_cli(capsys, "check", nilpotent_file, "--ineq", "NOPE")
        assert code == 1
        assert "UnknownSpec" in err


class TestDecompose:
    def test_parts_reassemble(self, capsys, nilpotent_file):
        code, out, _ = run_cli(capsys, "decompose", nilpotent_file)
        assert code == 0
        data = json.loads(out)
        U = linalg.matrix_from_dict(data["polar"]["unitary"])
        M = linalg.matrix_from_dict(data["polar"]["modulus"])
        P = linalg.matrix_from_dict(data["cartesian"]["real_part"])
        Q = linalg.matrix_from_dict(data["cartesian"]["imag_part"])
        assert np.allclose(U @ M, NILPOTENT, atol=1e-12)
        assert np.allclose(U.conj().T @ U, np.eye(2), atol=1e-12)
        assert np.allclose(P + 1j * Q, NILPOTENT, atol=1e-14)


class TestGen:
    def test_deterministic_output(self, capsys):
        code1, out1, _ = run_cli(capsys, "gen", "--recipe", "thm1",
                                 "--n", "4", "--seed", "7")
        code2, out2, _ = run_cli(capsys, "gen", "--recipe", "thm1",
                                 "--n", "4", "--seed", "7")
        assert code1 == code2 == 0
        assert out1 == out2
        data = json.loads(out1)
        assert set(data["operators"]) == {"A", "B", "C"}
        assert set(data["certificates"]) == {"intertwine_A_B",
                                             "intertwine_Astar_C"}
        for v in data["certificates"].values():
            assert v <= 1e-8

    def test_multi_recipe(self, capsys):
        code, out, _ = run_cli(capsys, "gen", "--recipe", "multi:2",
                               "--n", "2", "--seed", "1")
        assert code == 0
        assert len(json.loads(out)["operators"]) == 6

    def test_bad_recipe(self, capsys):
        code, _, err = run_cli(capsys, "gen", "--recipe", "bogus",
                               "--n", "2", "--seed", "1")
        assert code == 1


class TestRun:
    def test_small_run_exit_0(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "run", "--spec", "SCHWARZ_POS,KITTANEH_2003",
            "--dims", "2,3", "--trials", "5", "--seed", "1",
            "--threads", "1", "--json", str(tmp_path / "r.json"))
        assert code == 0
        assert "asserted_violations=0" in out
        report = json.loads((tmp_path / "r.json").read_text())
        assert set(report["specs"]) == {"SCHWARZ_POS", "KITTANEH_2003"}

    def test_config_file(self, capsys, tmp_path):
        cfg = {"dims": [2], "trials": 3, "seed": 9,
               "specs": ["POWER_YOUNG"], "threads": 1,
               "json_path": str(tmp_path / "c.json")}
        cfg_path = tmp_path / "cfg.json"
        cfg_path.write_text(json.dumps(cfg))
        code, _, _ = run_cli(capsys, "run", "--config", str(cfg_path))
        assert code == 0
        assert (tmp_path / "c.json").exists()

    def test_bad_flag_exit_1(self, capsys):
        code, _, err = run_cli(capsys, "run", "--dims", "2", "--bogus-flag")
        assert code == 1


class TestList:
    def test_lists_every_entry(self, capsys):
        code, out, _ = run_cli(capsys, "list")
        assert code == 0
        assert "GEN_MIXED_SCHWARZ" in out
        assert "[measured]" in out

    def test_json_mode(self, capsys):
        code, out, _ = run_cli(capsys, "list", "--json")
        data = json.loads(out)
        assert code == 0
        assert len(data) == 46


class TestUsage:
    def test_unknown_command(self, capsys):
        code, _, _ = run_cli(capsys, "frobnicate")
        assert code == 1

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "radius", "/nonexistent/m.json")
        assert code == 1
