"""Tests for certificate replay, formatting and serialization."""

import pytest

from monodec.classify import (
    Certificate,
    CertificateKind,
    Decision,
    describe_certificate,
    find_lq_order,
    is_vertex_splittable,
    verify_certificate,
)
from monodec.core import VariableSet
from monodec.errors import CertificateError, Verdict

SPLIT = CertificateKind.SPLIT_TREE


def leaf(note="principal ideal"):
    return Certificate.leaf(SPLIT, note)


class TestReplay:
    """Tests for verify_certificate."""

    def test_found_certificates_verify(self, path_ideal):
        assert verify_certificate(is_vertex_splittable(path_ideal).certificate, path_ideal)
        assert verify_certificate(find_lq_order(path_ideal).certificate, path_ideal)

    def test_variable_order(self, path_ideal):
        good = Certificate(CertificateKind.WPM_ORDER, order=(2, 0, 1, 3))
        bad = Certificate(CertificateKind.WPM_ORDER, order=(0, 1, 2, 3))
        assert verify_certificate(good, path_ideal)
        assert not verify_certificate(bad, path_ideal)

    def test_wrong_splitting_variable(self, path_ideal):
        cert = Certificate(SPLIT, vertex=0, children=(leaf(), leaf()))
        assert not verify_certificate(cert, path_ideal)

    def test_leaf_on_non_base_case(self, path_ideal):
        assert not verify_certificate(leaf(), path_ideal)

    def test_refutation_has_nothing_to_replay(self, cycle_ideal):
        with pytest.raises(CertificateError):
            verify_certificate(Certificate.refutation("no order"), cycle_ideal)

    def test_kind_mismatch(self, path_ideal, path_complex):
        with pytest.raises(CertificateError):
            verify_certificate(Certificate(CertificateKind.SHELLING_ORDER), path_ideal)
        with pytest.raises(CertificateError):
            verify_certificate(leaf(), path_complex)

    def test_malformed_nodes(self, path_ideal):
        with pytest.raises(CertificateError):
            verify_certificate(Certificate(SPLIT, vertex=1, children=(leaf(),)), path_ideal)
        with pytest.raises(CertificateError):
            verify_certificate(Certificate(SPLIT, children=(leaf(), leaf())), path_ideal)

    def test_wrong_item_types(self, path_ideal):
        with pytest.raises(CertificateError):
            verify_certificate(Certificate(CertificateKind.LQ_ORDER, order=(0, 1)), path_ideal)

    def test_order_of_other_generators(self, path_ideal, cycle_ideal):
        order = find_lq_order(cycle_ideal).certificate.order
        cert = Certificate(CertificateKind.LQ_ORDER, order=order)
        with pytest.raises(CertificateError):
            verify_certificate(cert, path_ideal)


class TestFormatting:
    """Tests for report lines and dictionaries."""

    def test_wpm_order(self):
        cert = Certificate(CertificateKind.WPM_ORDER, order=(2, 0, 1, 3))
        variables = VariableSet.standard(4)
        assert cert.format_order(variables) == "x3 > x1 > x2 > x4"
        assert cert.summary(variables) == "wpm-order: x3 > x1 > x2 > x4"

    def test_summaries(self, path_ideal):
        variables = path_ideal.variables
        assert Certificate.refutation("none").summary(variables) == "refutation: none"
        assert leaf().summary(variables) == "split-tree: principal ideal"
        cert = is_vertex_splittable(path_ideal).certificate
        assert cert.node_count() == 5
        assert cert.summary(variables) == "split-tree: root x2, 5 nodes"

    def test_describe_falls_back_to_summary(self, path_ideal):
        cert = Certificate(CertificateKind.WPM_ORDER, order=(2, 0, 1, 3))
        assert describe_certificate(cert, path_ideal) == cert.summary(path_ideal.variables)

    def test_to_dict(self, path_ideal):
        data = is_vertex_splittable(path_ideal).certificate.to_dict(path_ideal.variables)
        assert data["kind"] == "split-tree"
        assert data["vertex"] == "x2"
        assert len(data["children"]) == 2
        assert data["children"][1] == {"kind": "split-tree", "note": "principal ideal"}

    def test_decision_to_dict(self):
        variables = VariableSet.standard(2)
        decision = Decision.undecided("search_budget=3 exhausted", examined=4)
        assert decision.verdict == Verdict.UNDECIDED
        assert decision.to_dict(variables) == {
            "value": "undecided-cap",
            "examined": 4,
            "note": "search_budget=3 exhausted",
        }
        refuted = Decision(Verdict.FALSE, Certificate.refutation("no order"), 7)
        assert refuted.to_dict(variables)["certificate"] == {
            "kind": "refutation-note",
            "note": "no order",
        }
