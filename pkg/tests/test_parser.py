"""Tests for ideal expressions and variable orders."""

import pytest

from monodec.core import VariableSet
from monodec.config import Caps
from monodec.errors import OrderError, ParseError, ResourceCapError
from monodec.harness.parser import parse_ideal, parse_monomial, parse_order
from tests.conftest import CUBIC_DUAL, PATH_P4, SQUARE_PATH


class TestParseIdeal:
    """Tests for parse_ideal."""

    def test_infers_ring_from_largest_index(self):
        expr = parse_ideal("x1*x2, x2*x5")
        assert expr.n == 5
        assert not expr.declared

    def test_declared_ring(self):
        expr = parse_ideal("x1*x2", 4)
        assert expr.n == 4
        assert expr.declared

    def test_canonical_order_and_minimalization(self):
        assert parse_ideal("x3*x4, x1*x2").format() == "x1*x2, x3*x4"
        assert parse_ideal("x1*x2, x1").format() == "x1"
        assert parse_ideal("x2, x1").format() == "x1, x2"

    def test_powers_and_repeated_factors(self):
        assert parse_ideal("x1*x1").format() == "x1^2"
        assert parse_ideal("x1 ^ 2 * x2").format() == "x1^2*x2"

    def test_degenerate_tokens(self):
        zero = parse_ideal("0", 3).ideal
        unit = parse_ideal(" 1 ").ideal
        assert zero.is_zero and zero.n == 3
        assert unit.is_unit and unit.n == 1

    @pytest.mark.parametrize("text", [PATH_P4, CUBIC_DUAL, SQUARE_PATH])
    def test_format_parses_back(self, text):
        expr = parse_ideal(text)
        assert parse_ideal(expr.format(), expr.n).ideal == expr.ideal


class TestParseErrors:
    """Tests for error messages and positions."""

    @pytest.mark.parametrize(
        "text,position",
        [
            ("x0*x1", 0),
            ("x1^0", 3),
            ("x1 x2", 3),
            ("x1, ", 4),
            ("x1*y2", 3),
            ("x1^", 3),
        ],
    )
    def test_positions(self, text, position):
        with pytest.raises(ParseError) as exc:
            parse_ideal(text)
        assert exc.value.position == position
        assert exc.value.source == text

    def test_empty(self):
        with pytest.raises(ParseError, match="Empty ideal expression"):
            parse_ideal("   ")

    def test_index_beyond_declared_ring(self):
        with pytest.raises(ParseError, match="x5 exceeds the declared 3 variables") as exc:
            parse_ideal("x1*x2, x2*x5", 3)
        assert exc.value.position == 7

    def test_ring_needs_a_variable(self):
        with pytest.raises(ParseError):
            parse_ideal("x1", 0)

    def test_message_carries_position(self):
        with pytest.raises(ParseError, match=r"at position 0"):
            parse_ideal("x0")


class TestRingSizeCap:
    """Tests for the ring-size cap applied before exponent vectors are built."""

    def test_huge_index(self):
        with pytest.raises(ResourceCapError) as exc:
            parse_ideal("x100000000")
        assert exc.value.cap == "ring size"
        assert exc.value.actual == 100_000_000

    def test_huge_declared_ring(self):
        with pytest.raises(ResourceCapError):
            parse_ideal("x1*x2", 10**9)

    def test_configured_limit(self):
        assert parse_ideal("x1*x4", caps=Caps(max_variables=4)).n == 4
        with pytest.raises(ResourceCapError):
            parse_ideal("x1*x5", caps=Caps(max_variables=4))

    def test_unit_ideal_honours_declared_ring(self):
        with pytest.raises(ResourceCapError):
            parse_ideal("1", 65)

    def test_overlong_integer(self):
        with pytest.raises(ParseError, match="Integer too large") as exc:
            parse_ideal("x1, x" + "9" * 40)
        assert exc.value.position == 5

    def test_monomial_over_existing_ring(self):
        variables = VariableSet.standard(70)
        assert parse_monomial("x70", variables).degree == 1


class TestMonomialsAndOrders:
    """Tests for parse_monomial and parse_order."""

    def test_monomial(self):
        u = parse_monomial("x2*x3", VariableSet.standard(4))
        assert u.exponents == (0, 1, 1, 0)

    def test_monomial_rejects_lists(self):
        with pytest.raises(ParseError):
            parse_monomial("x1, x2", VariableSet.standard(2))

    def test_order(self):
        assert parse_order("x3>x1>x2>x4", VariableSet.standard(4)) == (2, 0, 1, 3)
        assert parse_order("x2 > x1", VariableSet.standard(2)) == (1, 0)

    def test_unknown_variable(self):
        with pytest.raises(ParseError) as exc:
            parse_order("x1>x5", VariableSet.standard(4))
        assert exc.value.position == 3

    def test_incomplete_order(self):
        with pytest.raises(OrderError):
            parse_order("x1>x2", VariableSet.standard(3))
