"""
End-to-end tests of the command line, run in-process through main().
"""

import json

import mpmath
import pandas as pd
import pytest
import scipy.special

from main import main, parse_m
from src.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_parse_m():
    assert parse_m("3") == [3]
    assert parse_m("1..4") == [1, 2, 3, 4]


class TestEval:
    def test_terminating_series(self, capsys):
        code, doc = run_json(capsys, ["eval", "--upper", "[0, 0.5]", "--lower", "[1.5]", "--x", "0.3"])
        assert code == EXIT_OK
        assert doc["value"] == [1.0, 0.0]
        assert doc["tail_bound"] == 0.0

    def test_gauss_from_params(self, capsys):
        params = json.dumps({"m": 1, "a": [0.3, 0.45], "b": [0, 0.7]})
        code, doc = run_json(capsys, ["eval", "--params", params, "--x", "0.2"])
        assert code == EXIT_OK
        expected = scipy.special.hyp2f1(0.45, 0.3, 0.7, 0.2)
        assert doc["value"][0] == pytest.approx(expected, rel=1e-13)
        assert doc["value"][1] == 0.0

    def test_zero_argument(self, capsys):
        code, doc = run_json(capsys, ["eval", "--upper", "[0.5, 0.5]", "--lower", "[1.5]", "--x", "0"])
        assert code == EXIT_OK
        assert doc["value"] == [1.0, 0.0]
        assert doc["terms_used"] == 1

    def test_negative_argument(self, capsys):
        code, doc = run_json(capsys, ["eval", "--upper", "[0.5, 0.5]", "--lower", "[1.5]", "--x", "-0.5"])
        assert code == EXIT_OK
        assert doc["value"][0] == pytest.approx(scipy.special.hyp2f1(0.5, 0.5, 1.5, -0.5), rel=1e-13)

    def test_complex_x_from_params(self, capsys):
        params = json.dumps({"m": 1, "a": [0.3, 0.45], "b": [0, 0.7], "x": [0.2, 0.1]})
        code, doc = run_json(capsys, ["eval", "--params", params])
        assert code == EXIT_OK
        assert doc["x"] == [0.2, 0.1]
        expected = complex(mpmath.hyp2f1(0.45, 0.3, 0.7, 0.2 + 0.1j))
        assert complex(*doc["value"]) == pytest.approx(expected, rel=1e-13)

    def test_upper_without_lower(self, capsys):
        assert main(["eval", "--upper", "[0.5, 0.5]"]) == EXIT_USAGE

    def test_bad_vector(self, capsys):
        assert main(["eval", "--upper", "[0.5,", "--lower", "[1.5]"]) == EXIT_USAGE


class TestCommands:
    def test_solutions(self, capsys):
        code, doc = run_json(capsys, ["solutions", "--m", "2", "--seed", "3"])
        assert code == EXIT_OK
        assert len(doc["solutions"]) == 3
        assert doc["seed"] == 3
        assert doc["parameters"]["m"] == 2

    def test_intersect_phi_has_determinant_check(self, capsys):
        code, doc = run_json(capsys, ["intersect", "--m", "2", "--seed", "5"])
        assert code == EXIT_OK
        assert doc["det_check"]["pass"] is True
        assert len(doc["cohomology"]["entries"]) == 3
        assert doc["cohomology"]["entries"][0][1] == [0.0, 0.0]

    def test_intersect_mixed(self, capsys):
        code, doc = run_json(capsys, ["intersect", "--m", "1", "--basis", "mixed"])
        assert code == EXIT_OK
        assert doc["cohomology"]["kind"] == "cohomology_mixed"
        assert "det_check" not in doc

    def test_periods(self, capsys):
        code, doc = run_json(capsys, ["periods", "--m", "2", "--x", "0.1"])
        assert code == EXIT_OK
        assert doc["row"]["dual"] is False
        assert doc["dual_row"]["dual"] is True
        assert len(doc["row"]["entries"]) == 3

    def test_verify(self, capsys):
        code, doc = run_json(capsys, ["verify", "--m", "2", "--seed", "7", "--x", "0.1"])
        assert code == EXIT_OK
        identities = [r["identity"] for r in doc["reports"]]
        assert identities == ["tpr_00", "corollary_52"]
        assert all(r["pass"] for r in doc["reports"])
        assert all(r["seed"] == 7 for r in doc["reports"])

    def test_quad(self, capsys):
        code, doc = run_json(capsys, ["quad", "--m", "1", "--seed", "2"])
        assert code == EXIT_OK
        assert [r["identity"] for r in doc["reports"]] == ["euler_integral", "beta_product"]

    def test_quad_at_zero(self, capsys):
        code, doc = run_json(capsys, ["quad", "--m", "1", "--seed", "2", "--x", "0"])
        assert code == EXIT_OK
        assert doc["reports"][0]["x"] == 0.0
        assert all(r["pass"] for r in doc["reports"])

    def test_underflowing_prefactor_is_a_failure(self, capsys):
        params = json.dumps({"m": 1, "a": [0.3, 0.45], "b": [0, [0.7, 700]]})
        assert main(["periods", "--params", params, "--x", "0.1"]) == EXIT_FAILED

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "nested" / "verify.json"
        code = main(["verify", "--m", "1", "--out", str(target)])
        assert code == EXIT_OK
        assert capsys.readouterr().out == ""
        doc = json.loads(target.read_text())
        assert len(doc["reports"]) == 2

    def test_output_is_deterministic(self, capsys):
        argv = ["verify", "--m", "3", "--seed", "11", "--x", "0.05"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first


class TestSweep:
    @pytest.mark.slow
    def test_sweep(self, capsys, tmp_path):
        csv = tmp_path / "runs.csv"
        code, doc = run_json(capsys, ["sweep", "--m", "1..2", "--count", "2", "--csv", str(csv)])
        assert code == EXIT_OK
        # 2 values of m x 2 draws x 3 x values x 2 identities
        assert doc["runs"] == 24
        assert doc["failures"] == []
        assert set(doc["max_rel_residual_by_identity"]) == {"corollary_52", "tpr_00"}
        table = pd.read_csv(csv)
        assert len(table) == 24
        assert set(table["m"]) == {1, 2}

    def test_sweep_rejects_params(self, capsys):
        params = json.dumps({"m": 1, "a": [0.3, 0.45], "b": [0, 0.7]})
        assert main(["sweep", "--params", params]) == EXIT_USAGE


class TestExitCodes:
    @pytest.mark.parametrize(
        "argv",
        [
            ["verify"],
            ["verify", "--m", "2", "--params", '{"m": 1, "a": [0.3, 0.45], "b": [0, 0.7]}'],
            ["verify", "--m", "2", "--tol", "0.5"],
            ["verify", "--m", "1..3"],
            ["transform", "--m", "2"],
            ["verify", "--m", "2", "--x", "0.5"],
            ["verify", "--m", "2", "--x", "-0.1"],
            ["verify", "--params", '{"m": 1, "a": [0.3, 0.45], "b": [0, 0.7], "x": [0.1, 0.05]}'],
            ["solutions", "--m", "1", "--x", "0"],
            ["quad", "--m", "1", "--x", "-0.2"],
            ["verify", "--params", "{not json"],
            ["verify", "--params", '{"m": 1, "a": [0.3, 0.45], "b": [0, 2.0]}'],
            ["verify", "--params", "/no/such/params.json"],
            ["quad", "--m", "1", "--level", "40"],
        ],
    )
    def test_usage_errors(self, capsys, argv):
        assert main(argv) == EXIT_USAGE

    def test_missing_config_file(self, capsys, tmp_path):
        assert main(["verify", "--m", "1", "--config", str(tmp_path / "absent.json")]) == EXIT_USAGE

    def test_failed_check(self, capsys, tmp_path, restore_settings):
        config = tmp_path / "strict.json"
        config.write_text(json.dumps({"tpr_tolerance": 1e-300}))
        code, doc = run_json(capsys, ["verify", "--m", "2", "--config", str(config)])
        assert code == EXIT_FAILED
        passed = {r["identity"]: r["pass"] for r in doc["reports"]}
        assert passed == {"tpr_00": False, "corollary_52": True}
