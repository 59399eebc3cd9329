"""Tests for vertex splittable ideals under both readings."""

from monodec.classify import SplitReading, describe_certificate, is_vertex_splittable
from monodec.classify import verify_certificate
from monodec.classify.splitting import base_case, reading_disagreement, split_at
from monodec.config import Caps
from monodec.core import MonomialIdeal, VariableSet, alexander_dual
from monodec.errors import Verdict
from tests.conftest import ideal_of


class TestSplitAt:
    """Tests for a single split I = x I_1 + I_2."""

    def test_path_splits_at_x2(self, path_ideal):
        split = split_at(path_ideal, 1)
        assert split is not None
        assert split.inner.format() == "x1, x3"
        assert split.outer.format() == "x3*x4"
        assert split.format(path_ideal) == "x2(x1, x3) + (x3*x4)"

    def test_path_does_not_split_at_x1(self, path_ideal):
        """I_2 = (x2*x3, x3*x4) is not inside I_1 = (x2)."""
        assert split_at(path_ideal, 0) is None

    def test_unused_variable(self):
        assert split_at(ideal_of("x1*x2, x2*x3", 4), 3) is None

    def test_literal_reading_rejects_squares(self, square_path):
        assert split_at(square_path, 0, SplitReading.LITERAL) is None

    def test_relaxed_reading_keeps_powers(self, square_path):
        split = split_at(square_path, 0, SplitReading.RELAXED)
        assert split.inner.format() == "x1, x2"
        assert split.outer.format() == "x2^2"

    def test_base_cases(self):
        variables = VariableSet.standard(2)
        assert base_case(MonomialIdeal.zero(variables)) == "zero ideal"
        assert base_case(MonomialIdeal.unit(variables)) == "unit ideal"
        assert base_case(ideal_of("x1*x2")) == "principal ideal"
        assert base_case(ideal_of("x1, x2")) is None


class TestVertexSplittable:
    """Tests for the recursive splitting search."""

    def test_path(self, path_ideal):
        decision = is_vertex_splittable(path_ideal)
        assert decision.holds
        assert decision.certificate.vertex == 1
        assert verify_certificate(decision.certificate, path_ideal)
        assert describe_certificate(decision.certificate, path_ideal) == (
            "split-tree: I = x2(x1, x3) + (x3*x4), 5 nodes"
        )

    def test_cubic_dual_splits_at_x4(self, cubic_dual):
        decision = is_vertex_splittable(cubic_dual)
        assert decision.holds
        assert decision.certificate.vertex == 3
        assert verify_certificate(decision.certificate, cubic_dual)

    def test_matroidal_ideals_split(self, cycle_ideal):
        assert is_vertex_splittable(cycle_ideal).holds

    def test_two_disjoint_edges(self, cycle_ideal):
        decision = is_vertex_splittable(alexander_dual(cycle_ideal))
        assert decision.refuted
        assert decision.certificate.note == "no literal splitting variable works"

    def test_degenerate_ideals_are_leaves(self):
        variables = VariableSet.standard(2)
        for ideal in (MonomialIdeal.zero(variables), MonomialIdeal.unit(variables)):
            decision = is_vertex_splittable(ideal)
            assert decision.holds
            assert decision.certificate.is_leaf

    def test_budget(self, cubic_dual):
        decision = is_vertex_splittable(cubic_dual, caps=Caps(search_budget=2))
        assert decision.verdict == Verdict.UNDECIDED


class TestReadings:
    """Tests for the literal and relaxed readings."""

    def test_squares_split_only_when_relaxed(self, square_path):
        assert is_vertex_splittable(square_path, SplitReading.LITERAL).refuted
        relaxed = is_vertex_splittable(square_path, SplitReading.RELAXED)
        assert relaxed.holds
        assert relaxed.certificate.relaxed
        assert verify_certificate(relaxed.certificate, square_path)

    def test_disagreement_note(self, square_path, path_ideal):
        note = reading_disagreement(square_path)
        assert "literal splitting false" in note
        assert "relaxed splitting true" in note
        assert reading_disagreement(path_ideal) is None

    def test_readings_agree_on_squarefree(self, path_ideal, cubic_dual, colon_ideal):
        for ideal in (path_ideal, cubic_dual, colon_ideal):
            literal = is_vertex_splittable(ideal, SplitReading.LITERAL)
            relaxed = is_vertex_splittable(ideal, SplitReading.RELAXED)
            assert literal.verdict == relaxed.verdict
