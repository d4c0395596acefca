"""Tests for the command-line front end: parsing, execution, determinism."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

import trigzeta as tz
from trigzeta import cli
from trigzeta.errors import UsageError

_SRC = str(Path(__file__).resolve().parent.parent / "src")


def run_cli(*args: str) -> subprocess.CompletedProcess:
    env = dict(os.environ)
    env["PYTHONPATH"] = _SRC + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run(
        [sys.executable, "-m", "trigzeta", *args],
        capture_output=True,
        text=True,
        env=env,
        timeout=300,
    )


class TestParseComplex:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("2", 2 + 0j),
            ("2.5", 2.5 + 0j),
            ("-1.5", -1.5 + 0j),
            ("2.5+1.3i", 2.5 + 1.3j),
            ("3-0.5i", 3 - 0.5j),
            ("1e2", 100 + 0j),
            ("2.5+1e-3i", 2.5 + 0.001j),
            (".5+.25i", 0.5 + 0.25j),
        ],
    )
    def test_accepted(self, text, expected):
        assert cli.parse_complex(text) == expected

    @pytest.mark.parametrize("text", ["", "i", "2.5 + 1.3i", "1.3i", "2+i", "abc", "2,5"])
    def test_rejected(self, text):
        with pytest.raises(UsageError):
            cli.parse_complex(text)


class TestParseArgs:
    def test_eval_with_catalog_id(self):
        config = cli.parse_args(["eval", "--s", "2", "--rep", "E28", "--q", "1000"])
        assert config.command == "eval"
        assert config.s == 2 + 0j
        assert config.spec == tz.TrigSumSpec(tz.TrigKind.COT, 0, 1)
        assert config.q == 1000

    def test_converge_with_explicit_spec(self):
        config = cli.parse_args(
            "converge --s 2.5+1.3i --kind csc --m 0 --n 0 --q0 10 --factor 2 "
            "--steps 11 --output csv".split()
        )
        assert config.command == "converge"
        assert config.spec == tz.TrigSumSpec(tz.TrigKind.CSC, 0, 0)
        assert config.schedule == tz.QSchedule(10, 2, 11)
        assert config.output == "csv"

    def test_pole_exponent_is_a_usage_error(self):
        with pytest.raises(UsageError, match="Re\\(s\\) > 1"):
            cli.parse_args(["eval", "--s", "1", "--rep", "E28", "--q", "10"])

    def test_unknown_flag(self):
        with pytest.raises(UsageError):
            cli.parse_args(["eval", "--s", "2", "--rep", "E28", "--q", "10", "--bogus"])

    def test_unknown_catalog_id(self):
        with pytest.raises(Exception):
            cli.parse_args(["eval", "--s", "2", "--rep", "E99", "--q", "10"])

    def test_rep_conflicts_with_explicit(self):
        with pytest.raises(UsageError, match="mutually exclusive"):
            cli.parse_args(
                ["eval", "--s", "2", "--rep", "E28", "--kind", "cot", "--m", "0",
                 "--n", "1", "--q", "10"]
            )

    def test_partial_explicit_spec(self):
        with pytest.raises(UsageError):
            cli.parse_args(["eval", "--s", "2", "--kind", "cot", "--q", "10"])

    def test_inadmissible_q(self):
        with pytest.raises(UsageError, match="inadmissible"):
            cli.parse_args(["eval", "--s", "2", "--kind", "cot", "--m", "0",
                            "--n", "0", "--q", "1"])

    def test_suite_choices(self):
        config = cli.parse_args(["verify", "--suite", "bernoulli"])
        assert config.suite == "bernoulli"
        with pytest.raises(UsageError):
            cli.parse_args(["verify", "--suite", "everything"])

    def test_s_only_for_tannery_suite(self):
        with pytest.raises(UsageError):
            cli.parse_args(["verify", "--suite", "cross", "--s", "2"])

    def test_oracle_domain(self):
        with pytest.raises(UsageError):
            cli.parse_args(["oracle", "--s", "1"])
        with pytest.raises(UsageError):
            cli.parse_args(["oracle", "--s", "-2"])


class TestExecution:
    def test_oracle_stdout(self):
        result = run_cli("oracle", "--s", "2")
        assert result.returncode == 0
        assert "1.6449340668" in result.stdout
        assert "method = euler_maclaurin" in result.stdout
        assert "error_bound" in result.stdout

    def test_eval_reports_error_against_oracle(self):
        result = run_cli("eval", "--s", "2", "--rep", "E28", "--q", "1000")
        assert result.returncode == 0
        assert "value = 1.644" in result.stdout
        assert "abs_error" in result.stdout

    def test_eval_json(self):
        result = run_cli("eval", "--s", "2", "--rep", "E28", "--q", "100",
                         "--output", "json")
        payload = json.loads(result.stdout)
        assert payload["q"] == 100
        assert payload["term_count"] == 100
        assert payload["reference"]["method"] == "euler_maclaurin"

    def test_usage_error_exit_one(self):
        result = run_cli("eval", "--s", "1", "--rep", "E28", "--q", "10")
        assert result.returncode == 1
        assert result.stderr.startswith("error: ")
        assert "Re(s) > 1" in result.stderr

    def test_verify_bernoulli_green(self):
        result = run_cli("verify", "--suite", "bernoulli")
        assert result.returncode == 0
        assert "all checks passed" in result.stdout

    def test_verify_tannery_negative_control(self):
        result = run_cli("verify", "--suite", "tannery", "--s", "1")
        assert result.returncode == 2
        assert result.stderr.startswith("error: ")
        assert "condition (ii)" in result.stderr

    def test_verify_tannery_default_green(self):
        result = run_cli("verify", "--suite", "tannery")
        assert result.returncode == 0


class TestDeterminismAndFiles:
    def test_converge_csv_byte_identical(self):
        args = ("converge", "--s", "2", "--rep", "E28", "--q0", "10",
                "--factor", "2", "--steps", "6", "--output", "csv")
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout
        assert first.stdout.startswith("q,re_estimate,im_estimate,abs_error,rel_error\n")

    def test_converge_json_byte_identical(self):
        args = ("converge", "--s", "2.5+1.3i", "--kind", "csc", "--m", "0",
                "--n", "1", "--q0", "10", "--factor", "2", "--steps", "5",
                "--output", "json")
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.stdout == second.stdout
        json.loads(first.stdout)  # well-formed

    def test_out_file_matches_stdout(self, tmp_path):
        out = tmp_path / "sweep.csv"
        args = ("converge", "--s", "2", "--rep", "E30", "--q0", "16",
                "--factor", "2", "--steps", "5", "--output", "csv")
        piped = run_cli(*args)
        written = run_cli(*args, "--out", str(out))
        assert written.returncode == 0
        assert written.stdout == ""
        assert out.read_text() == piped.stdout

    def test_no_partial_file_on_failure(self, tmp_path):
        # unwritable directory for the temp file: parent does not exist
        missing = tmp_path / "nope" / "sweep.csv"
        result = run_cli("converge", "--s", "2", "--rep", "E28", "--q0", "10",
                         "--factor", "2", "--steps", "4", "--output", "csv",
                         "--out", str(missing))
        assert result.returncode == 1
        assert result.stderr.startswith("error: ")
        assert not missing.exists()
