"""Command-line support: expression parsing, classification reports, corpus and suites."""

from .corpus import CorpusCase, CorpusResult, load_corpus, verify_corpus
from .parser import IdealExpression, parse_ideal, parse_monomial, parse_order
from .report import ClassificationReport, classify
from .suites import Suite, SuiteResult, run_suite

__all__ = [
    "ClassificationReport",
    "CorpusCase",
    "CorpusResult",
    "IdealExpression",
    "Suite",
    "SuiteResult",
    "classify",
    "load_corpus",
    "parse_ideal",
    "parse_monomial",
    "parse_order",
    "run_suite",
    "verify_corpus",
]
