"""Command-line interface: golden outputs, config merging, exit codes, atomic export."""

import json
import os
from fractions import Fraction

import pytest

from degenbern.bernoulli import carlitz_beta
from degenbern.cli import EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED, main
from degenbern.exactcore import specialize


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_symbolic_pretty(self, capsys):
        code, out, err = run(capsys, "compute", "beta", "--max-n", "2")
        assert code == EXIT_OK
        assert err == ""
        assert out == "0: 1\n1: -1/2 + 1/2*l\n2: 1/6 - 1/6*l^2\n"

    def test_evaluated_pretty(self, capsys):
        code, out, _ = run(capsys, "compute", "beta", "--max-n", "1", "--lambda", "1/2")
        assert code == EXIT_OK
        assert out == "0: 1\n1: -1/4\n"

    def test_evaluation_matches_specialize(self, capsys):
        lam = Fraction(2, 3)
        code, out, _ = run(capsys, "compute", "beta", "--max-n", "6", "--lambda", "2/3")
        assert code == EXIT_OK
        for line in out.splitlines():
            label, value = line.split(": ")
            expected = specialize(carlitz_beta(int(label)), lam=lam)
            assert Fraction(value) == expected

    def test_csv_number_family(self, capsys):
        code, out, _ = run(capsys, "compute", "beta", "--max-n", "0", "--format", "csv")
        assert code == EXIT_OK
        assert out == "0, 1/1\n"

    def test_csv_triangle_family(self, capsys):
        code, out, _ = run(capsys, "compute", "eulerian", "--max-n", "1", "--format", "csv")
        assert code == EXIT_OK
        assert out == "0, 0, 1/1\n1, 0, 1/1\n1, 1, 0/1\n"

    def test_json_triangle_golden(self, capsys):
        code, out, _ = run(capsys, "compute", "stirling2", "--max-n", "2", "--format", "json")
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["family"] == "stirling2"
        assert doc["parameters"] == {}
        entry = next(e for e in doc["entries"] if (e["n"], e["k"]) == (2, 1))
        assert entry["lambda_coeffs"] == ["1/1", "-1/1"]

    def test_json_polynomial_golden(self, capsys):
        code, out, _ = run(
            capsys, "compute", "gen-beta-poly", "--max-n", "1", "--p", "1", "--format", "json"
        )
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["parameters"] == {"p": 1}
        assert doc["entries"][1]["x_coeffs"] == [["-1/3", "1/3"], ["1/1"]]

    def test_restricted_family_carries_both_parameters(self, capsys):
        code, out, _ = run(
            capsys, "compute", "r-stirling2", "--max-n", "2", "--r", "2", "--format", "json"
        )
        assert code == EXIT_OK
        assert json.loads(out)["parameters"] == {"r": 2}

    def test_evaluated_json_uses_single_coefficient(self, capsys):
        code, out, _ = run(
            capsys, "compute", "beta", "--max-n", "1", "--lambda", "1/2", "--format", "json"
        )
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc["parameters"]["lambda"] == "1/2"
        assert doc["entries"][1]["lambda_coeffs"] == ["-1/4"]


class TestExport:
    def test_json_round_trip_is_byte_identical(self, capsys, tmp_path):
        target = tmp_path / "table.json"
        argv = ["export", "stirling2", "--max-n", "4", "--output", str(target)]
        assert main(list(argv)) == EXIT_OK
        first = target.read_bytes()
        assert main(list(argv)) == EXIT_OK
        assert target.read_bytes() == first
        capsys.readouterr()

    def test_export_matches_compute_stdout(self, capsys, tmp_path):
        target = tmp_path / "table.json"
        assert main(["export", "beta", "--max-n", "3", "--output", str(target)]) == EXIT_OK
        _, out, _ = run(capsys, "compute", "beta", "--max-n", "3", "--format", "json")
        assert target.read_text() == out

    def test_no_temp_files_left_behind(self, capsys, tmp_path):
        target = tmp_path / "out.csv"
        code = main(
            ["export", "beta", "--max-n", "2", "--format", "csv", "--output", str(target)]
        )
        capsys.readouterr()
        assert code == EXIT_OK
        assert os.listdir(tmp_path) == ["out.csv"]

    def test_output_required(self, capsys):
        code, _, err = run(capsys, "export", "beta", "--max-n", "2")
        assert code == EXIT_USAGE
        assert err.startswith("error:")


class TestVerifyCommand:
    def test_clean_selection(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "Thm4,Eq11", "--max-n", "4", "--truncation", "8"
        )
        assert code == EXIT_OK
        assert out == "Eq11: 4/4 cases passed [ok]\nThm4: 5/5 cases passed [ok]\n"

    def test_informational_failure_keeps_exit_zero(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--suite", "Remark-mult-B", "--max-n", "3", "--truncation", "6"
        )
        assert code == EXIT_OK
        assert "Remark-mult-B: 2/4 cases passed [recorded]" in out
        assert "failed at n=2, p=0, m=2" in out

    def test_strict_promotes_informational_failure(self, capsys):
        code, out, _ = run(
            capsys,
            "verify",
            "--suite",
            "Remark-mult-B",
            "--max-n",
            "3",
            "--truncation",
            "6",
            "--strict",
        )
        assert code == EXIT_VERIFY_FAILED
        assert "[FAILED]" in out

    def test_unknown_token_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--suite", "Thm99", "--max-n", "2", "--truncation", "4")
        assert code == EXIT_USAGE
        assert "unknown identity: Thm99" in err

    def test_insufficient_truncation(self, capsys):
        code, _, err = run(capsys, "verify", "--max-n", "8", "--truncation", "8")
        assert code == EXIT_USAGE
        assert "insufficient series order" in err


class TestConfigAndErrors:
    def test_config_supplies_defaults(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"max_n": 1, "format": "csv"}))
        code, out, _ = run(capsys, "compute", "beta", "--config", str(cfg))
        assert code == EXIT_OK
        assert out == "0, 1/1\n1, -1/2 + 1/2*l\n"

    def test_flag_overrides_config(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"max_n": 5, "format": "csv"}))
        code, out, _ = run(capsys, "compute", "beta", "--config", str(cfg), "--max-n", "0")
        assert code == EXIT_OK
        assert out == "0, 1/1\n"

    def test_unknown_config_key(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"max_m": 3}))
        code, _, err = run(capsys, "compute", "beta", "--config", str(cfg))
        assert code == EXIT_USAGE
        assert "max_m" in err

    def test_mistyped_config_value(self, capsys, tmp_path):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"max_n": "three"}))
        code, _, err = run(capsys, "compute", "beta", "--config", str(cfg))
        assert code == EXIT_USAGE
        assert err.startswith("error:")

    def test_bad_rational_literal(self, capsys):
        code, _, err = run(capsys, "compute", "beta", "--max-n", "2", "--lambda", "1/0")
        assert code == EXIT_USAGE
        assert "invalid rational literal" in err

    def test_symbolic_and_lambda_conflict(self, capsys):
        code, _, err = run(
            capsys, "compute", "beta", "--max-n", "2", "--symbolic", "--lambda", "1/2"
        )
        assert code == EXIT_USAGE
        assert "not both" in err

    def test_unknown_family_is_argparse_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "nosuch", "--max-n", "2"])
        capsys.readouterr()
        assert exc.value.code == EXIT_USAGE

    def test_missing_family(self, capsys):
        code, _, err = run(capsys, "compute", "--max-n", "2")
        assert code == EXIT_USAGE
        assert err.startswith("error:")

    def test_library_range_error_maps_to_usage(self, capsys):
        code, _, err = run(capsys, "compute", "gen-beta", "--max-n", "3", "--p", "-2")
        assert code == EXIT_USAGE
        assert "parameter out of range" in err
