"""Tests for linear quotients."""

import pytest

from monodec.classify import find_lq_order, has_linear_quotients_under, verify_certificate
from monodec.classify.quotients import first_nonlinear_step, successive_colon
from monodec.config import Caps
from monodec.core import MonomialIdeal, VariableSet, alexander_dual
from monodec.errors import DegenerateIdealError, OrderError, Verdict
from tests.conftest import ideal_of


class TestGivenOrder:
    """Tests for checking a fixed generator order."""

    def test_path_in_canonical_order(self, path_ideal):
        assert has_linear_quotients_under(path_ideal, path_ideal.gens)

    def test_path_with_far_edge_second(self, path_ideal):
        x12, x23, x34 = path_ideal.gens
        assert first_nonlinear_step(path_ideal, [x12, x34, x23]) == 1
        assert not has_linear_quotients_under(path_ideal, [x12, x34, x23])

    def test_successive_colon(self, path_ideal):
        x12, x23, x34 = path_ideal.gens
        assert successive_colon(path_ideal, [x12, x23], x34).format() == "x2"

    def test_not_a_permutation(self, path_ideal):
        with pytest.raises(OrderError):
            has_linear_quotients_under(path_ideal, path_ideal.gens[:2])

    def test_zero_ideal_rejected(self):
        with pytest.raises(DegenerateIdealError):
            has_linear_quotients_under(MonomialIdeal.zero(VariableSet.standard(2)), [])


class TestOrderSearch:
    """Tests for the linear-quotients search."""

    def test_found_orders_verify(self, path_ideal, colon_ideal, cubic_dual, square_path):
        for ideal in (path_ideal, colon_ideal, cubic_dual, square_path):
            decision = find_lq_order(ideal)
            assert decision.holds
            assert verify_certificate(decision.certificate, ideal)

    def test_two_disjoint_edges(self, cycle_ideal):
        decision = find_lq_order(alexander_dual(cycle_ideal))
        assert decision.refuted
        assert decision.certificate.note.startswith("no order of the 2 generators")

    def test_mixed_degrees(self):
        """x1 first, then x2*x3 with colon (x1)."""
        decision = find_lq_order(ideal_of("x2*x3, x1"))
        assert decision.holds

    def test_budget_exhaustion(self, cycle_ideal):
        dual = alexander_dual(cycle_ideal)
        decision = find_lq_order(dual, Caps(max_lq_generators=1, search_budget=1))
        assert decision.verdict == Verdict.UNDECIDED

    def test_zero_ideal_rejected(self):
        with pytest.raises(DegenerateIdealError):
            find_lq_order(MonomialIdeal.zero(VariableSet.standard(2)))
