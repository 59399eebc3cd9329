"""Tests for classification reports and their audit."""

from monodec.classify import Decision
from monodec.config import Caps
from monodec.core import FieldSpec
from monodec.errors import ExitCode
from monodec.harness.report import UNDECIDED, classify, decision_value, format_value
from monodec.main import report_exit_code
from tests.conftest import ideal_of


class TestClassify:
    """Tests for classify on the reference ideals."""

    def test_path(self, path_ideal):
        report = classify(path_ideal)
        assert report.audit == []
        props = report.properties
        assert props["generators"] == 3
        assert props["matroidal"] is False
        assert props["vertex_splittable"] is True
        assert props["linear_quotients"] is True
        assert props["regularity"] == 2
        assert props["dual"] == "x1*x3, x2*x3, x2*x4"
        assert props["cohen_macaulay"] is True
        assert report.certificates["vertex_splittable"] == (
            "split-tree: I = x2(x1, x3) + (x3*x4), 5 nodes"
        )

    def test_cycle(self, cycle_ideal):
        report = classify(cycle_ideal)
        assert report.audit == []
        assert report.get("matroidal") is True
        assert report.get("sequentially_cm") is False
        assert report.get("shellable") is False
        assert report.get("dual_linear_quotients") is False
        assert report.certificates["shellable"].startswith("refutation: ")

    def test_square_path(self, square_path):
        report = classify(square_path)
        assert report.audit == []
        assert report.get("vertex_splittable") is False
        assert report.get("vertex_splittable_relaxed") is True
        assert report.get("splitting_readings_agree") is False
        assert report.get("dual") is None

    def test_squarefree_has_no_relaxed_entry(self, path_ideal):
        assert "vertex_splittable_relaxed" not in classify(path_ideal).properties

    def test_single_variable(self):
        report = classify(ideal_of("x1"))
        assert report.audit == []
        assert report.get("regularity") == 1
        assert report.get("linear_resolution") is True

    def test_degenerate_ideals(self):
        for text in ("0", "1"):
            report = classify(ideal_of(text, 2))
            assert report.audit == []
            assert report.get("vertex_splittable") is True
            assert report.get("vertex_decomposable") is True
            assert report.get("shellable") is True
        assert classify(ideal_of("0", 2)).get("generators") == 0

    def test_prime_field(self, path_ideal):
        report = classify(path_ideal, FieldSpec.prime_field(2))
        assert report.field == "fp2"
        assert report.get("regularity") == 2


class TestReportOptions:
    """Tests for certify, timings and serialization."""

    def test_certify_gives_dictionaries(self, path_ideal):
        report = classify(path_ideal, certify=True)
        cert = report.certificates["vertex_splittable"]
        assert cert["kind"] == "split-tree"
        assert cert["vertex"] == "x2"

    def test_timings_off_by_default(self, path_ideal):
        assert classify(path_ideal).timings == {}
        timed = classify(path_ideal, timed=True)
        assert "linear_quotients" in timed.timings
        assert all(t >= 0 for t in timed.timings.values())

    def test_to_dict(self, path_ideal):
        data = classify(path_ideal).to_dict()
        assert data["subject"] == "x1*x2, x2*x3, x3*x4"
        assert data["n"] == 4
        assert data["field"] == "q"
        assert data["audit"] == []


class TestValues:
    """Tests for value formatting and exit codes."""

    def test_format_value(self):
        assert format_value(True) == "true"
        assert format_value(False) == "false"
        assert format_value(3) == "3"
        assert format_value("x1, x2") == "x1, x2"

    def test_decision_value(self):
        assert decision_value(Decision.undecided("cap")) == UNDECIDED == "undecided-cap"

    def test_exit_codes(self, path_ideal, cubic_dual):
        report = classify(path_ideal)
        assert report_exit_code(report) == ExitCode.SUCCESS
        capped = classify(cubic_dual, caps=Caps(max_orderings=5))
        assert capped.get("weakly_polymatroidal") == UNDECIDED
        assert capped.has_undecided
        assert report_exit_code(capped) == ExitCode.RESOURCE_CAP
        capped.audit.append("forced")
        assert report_exit_code(capped) == ExitCode.AUDIT_FAILURE
