"""Tests for CLI commands."""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from tests.conftest import CUBIC_DUAL, CYCLE_C4, PATH_P4

REPO_ROOT = Path(__file__).resolve().parents[1]


def run_cli(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [sys.executable, "-m", "monodec.main", *args],
        cwd=REPO_ROOT,
        capture_output=True,
        text=True,
    )


class TestMonodecCLI:
    """Tests for help, version and argument errors."""

    def test_help(self):
        result = run_cli("--help")
        assert result.returncode == 0
        assert "classify" in result.stdout
        assert "verify-paper" in result.stdout

    def test_version(self):
        result = run_cli("version")
        assert result.returncode == 0
        assert result.stdout.strip() == "monodec 0.1.0"

    def test_parse_error_shows_position(self):
        result = run_cli("classify", "x1*x2, x0")
        assert result.returncode == 1
        assert "Parse error" in result.stderr
        assert "        ^" in result.stderr

    def test_bad_field(self):
        result = run_cli("reg", PATH_P4, "--field", "fp4")
        assert result.returncode == 1
        assert "not prime" in result.stderr

    def test_non_positive_cap(self):
        result = run_cli("classify", PATH_P4, "--max-orderings", "0")
        assert result.returncode == 1
        assert "must be positive" in result.stderr
        assert "Unexpected error" not in result.stderr

    def test_unknown_property(self):
        assert run_cli("check", "colourful", PATH_P4).returncode != 0

    def test_unknown_command_is_usage_error(self):
        result = run_cli("nope")
        assert result.returncode == 1
        assert "No such command" in result.stderr
        assert "Unexpected error" not in result.stderr

    def test_huge_variable_index(self):
        result = run_cli("dual", "x100000000")
        assert result.returncode == 2
        assert "Resource cap" in result.stderr


class TestIdealCommands:
    """Tests for classify, dual, betti and reg."""

    def test_classify_json(self):
        result = run_cli("classify", PATH_P4, "--json")
        assert result.returncode == 0
        report = json.loads(result.stdout)
        assert report["n"] == 4
        assert report["properties"]["vertex_splittable"] is True
        assert report["properties"]["regularity"] == 2
        assert report["audit"] == []
        assert report["timings"] == {}

    def test_classify_certify_and_timings(self):
        result = run_cli("classify", PATH_P4, "--json", "--certify", "--timings")
        report = json.loads(result.stdout)
        assert report["certificates"]["vertex_splittable"]["vertex"] == "x2"
        assert "shellable" in report["timings"]

    def test_classify_table(self):
        result = run_cli("classify", CYCLE_C4)
        assert result.returncode == 0
        assert "AUDIT" not in result.stdout

    def test_classify_undecided(self):
        result = run_cli("classify", CUBIC_DUAL, "--json", "--max-orderings", "5")
        assert result.returncode == 2
        report = json.loads(result.stdout)
        assert report["properties"]["weakly_polymatroidal"] == "undecided-cap"

    def test_dual(self):
        result = run_cli("dual", PATH_P4)
        assert result.returncode == 0
        assert result.stdout.strip() == "x1*x3, x2*x3, x2*x4"

    def test_dual_of_non_squarefree(self):
        assert run_cli("dual", "x1^2, x2").returncode == 1

    def test_betti_json(self):
        result = run_cli("betti", CYCLE_C4, "--json")
        assert result.returncode == 0
        assert json.loads(result.stdout)

    def test_betti_table(self):
        result = run_cli("betti", CYCLE_C4)
        assert result.returncode == 0
        assert "Betti table" in result.stdout

    def test_reg(self):
        result = run_cli("reg", "x1*x3, x2*x4")
        assert result.returncode == 0
        assert result.stdout.strip() == "3"


class TestCheckAndSearch:
    """Tests for single-property checks and order searches."""

    def test_check_with_certificate(self):
        result = run_cli("check", "vertex-splittable", PATH_P4)
        assert result.returncode == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "true"
        assert lines[1] == "split-tree: I = x2(x1, x3) + (x3*x4), 5 nodes"

    def test_check_refuted(self):
        result = run_cli("check", "shellable", CYCLE_C4)
        assert result.returncode == 0
        assert result.stdout.splitlines()[0] == "false"

    def test_check_plain_property(self):
        result = run_cli("check", "complement-chordal", CYCLE_C4, "--json")
        assert json.loads(result.stdout)["value"] is True

    def test_check_undecided(self):
        result = run_cli("check", "weakly-polymatroidal", CUBIC_DUAL, "--max-orderings", "5")
        assert result.returncode == 2
        assert result.stdout.splitlines()[0] == "undecided-cap"

    def test_wpm_refutation(self):
        result = run_cli("search-order", "wpm", CUBIC_DUAL)
        assert result.returncode == 0
        assert result.stdout.splitlines()[0] == "false"
        assert "orders covered: 720" in result.stdout

    def test_wpm_order(self):
        result = run_cli("search-order", "wpm", PATH_P4, "--json")
        assert result.returncode == 0
        document = json.loads(result.stdout)
        assert document["value"] == "true"
        assert document["certificate"]["kind"] == "wpm-order"

    def test_lq_order(self):
        result = run_cli("search-order", "lq", PATH_P4)
        assert result.returncode == 0
        assert result.stdout.splitlines()[0] == "true"


class TestHarnessCommands:
    """Tests for verify-paper and enumerate."""

    def test_shipped_corpus(self):
        result = run_cli("verify-paper")
        assert result.returncode == 0
        assert "passed" in result.stdout

    def test_mismatch(self, tmp_path):
        corpus = tmp_path / "flip.corpus"
        corpus.write_text(f"flip: {PATH_P4}; matroidal=true\n", encoding="utf-8")
        result = run_cli("verify-paper", str(corpus))
        assert result.returncode == 3
        assert "MISMATCH" in result.stdout

    def test_mismatch_json(self, tmp_path):
        corpus = tmp_path / "flip.corpus"
        corpus.write_text(f"flip: {PATH_P4}; regularity=3\n", encoding="utf-8")
        result = run_cli("verify-paper", str(corpus), "--json")
        assert result.returncode == 3
        document = json.loads(result.stdout)
        assert document["mismatches"] == [
            {"case": "flip", "key": "regularity", "expected": "3", "got": "2"}
        ]

    def test_missing_corpus(self, tmp_path):
        result = run_cli("verify-paper", str(tmp_path / "missing.corpus"))
        assert result.returncode == 1

    def test_enumerate(self):
        result = run_cli("enumerate", "--theorem", "2.6i", "--n", "3", "--json")
        assert result.returncode == 0
        document = json.loads(result.stdout)
        assert document["failures"] == []
        assert document["instances"] > 0

    @pytest.mark.parametrize(
        "family, suite, n",
        [
            ("2.3", "matroidal", 3),
            ("2.6i", "few-generators", 3),
            ("2.6ii", "covering-supports", 3),
            ("2.10", "quadratic", 4),
            ("duality", "duality", 3),
        ],
    )
    def test_enumerate_families(self, family, suite, n):
        result = run_cli("enumerate", "--theorem", family, "--n", str(n), "--count", "5", "--json")
        assert result.returncode == 0, result.stderr
        document = json.loads(result.stdout)
        assert document["suite"] == suite
        assert document["failures"] == []

    def test_enumerate_rejects_unknown_family(self):
        result = run_cli("enumerate", "--theorem", "2.7", "--n", "3")
        assert result.returncode == 1

    def test_enumerate_over_limit(self):
        result = run_cli("enumerate", "--theorem", "2.3", "--n", "6")
        assert result.returncode == 2
        assert "Resource cap" in result.stderr
