"""Unit tests for string_utils module - corpus line handling."""

import pytest

from monodec.utils.string_utils import short_msg, split_top_level, strip_comment, unquote


class TestShortMsg:
    """Tests for short_msg function."""

    def test_short_string(self):
        assert short_msg("hello") == "hello"

    def test_exact_width(self):
        assert short_msg("a" * 48) == "a" * 48

    def test_long_string(self):
        """Longer strings are cut to the width with an ellipsis."""
        assert short_msg("a" * 20, 15) == "a" * 15 + "..."

    def test_empty_string(self):
        assert short_msg("") == ""

    def test_invalid_type(self):
        with pytest.raises(TypeError):
            short_msg(123)


class TestStripComment:
    """Tests for strip_comment function."""

    def test_trailing_comment(self):
        assert strip_comment("p: x1; regularity=1  # note") == "p: x1; regularity=1  "

    def test_hash_inside_quotes(self):
        assert strip_comment('p: x1; dual="#"') == 'p: x1; dual="#"'

    def test_no_comment(self):
        assert strip_comment("p: x1") == "p: x1"

    def test_invalid_type(self):
        with pytest.raises(TypeError):
            strip_comment(None)


class TestSplitTopLevel:
    """Tests for split_top_level function."""

    def test_plain(self):
        assert split_top_level("a=1, b=2") == ["a=1", "b=2"]

    def test_quotes_and_brackets_protect_commas(self):
        text = 'dual="x1, x2", pair_violates[x1>x2 | x1, x2]=true'
        assert split_top_level(text) == ['dual="x1, x2"', "pair_violates[x1>x2 | x1, x2]=true"]

    def test_empty(self):
        assert split_top_level("") == [""]


class TestUnquote:
    """Tests for unquote function."""

    def test_quoted(self):
        assert unquote('"x1, x2"') == "x1, x2"

    def test_bare_and_lone_quote(self):
        assert unquote("true") == "true"
        assert unquote('"') == '"'
