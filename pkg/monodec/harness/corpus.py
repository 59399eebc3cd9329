"""Reference corpus: named ideals with expected property values.

One case per line:

    name: ideal-expr; key=value, key=value

'#' starts a comment. Keys are report properties or one of the computed keys in
COMPUTED_KEYS, some of which take an argument in brackets, e.g. `colon[x2]=...` or
`wpm_under[x3>x1>x2>x4]=true`. Values containing commas are double-quoted.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from monodec.classify.exchange import is_weakly_polymatroidal_under, pair_violates
from monodec.classify.splitting import SplitReading, is_vertex_splittable
from monodec.config import DEFAULT_CAPS, Caps
from monodec.core.field import RATIONALS, FieldSpec
from monodec.core.ideal import MonomialIdeal, colon_by_monomial
from monodec.errors import ParseError
from monodec.harness.parser import parse_ideal, parse_monomial, parse_order
from monodec.harness.report import PROPERTY_KEYS, ClassificationReport, classify, format_value
from monodec.homology.betti import has_linear_resolution
from monodec.utils.string_utils import split_top_level, strip_comment, unquote

LOGGER = logging.getLogger(__name__)

DEFAULT_CORPUS = Path(__file__).parent / "data" / "reference.corpus"

# Keys evaluated directly rather than read from a classification report.
COMPUTED_KEYS = {
    "vars": False,
    "split_root": False,
    "wpm_under": True,
    "pair_violates": True,
    "colon": True,
    "colon_linear_resolution": True,
}


@dataclass(frozen=True)
class Expectation:
    key: str
    argument: Optional[str]
    expected: str

    @property
    def label(self) -> str:
        return self.key if self.argument is None else f"{self.key}[{self.argument}]"


@dataclass(frozen=True)
class CorpusCase:
    name: str
    expression: str
    expectations: tuple[Expectation, ...]
    line: int = 0

    @property
    def declared_vars(self) -> Optional[int]:
        for e in self.expectations:
            if e.key == "vars":
                return int(e.expected)
        return None


@dataclass(frozen=True)
class Mismatch:
    case: str
    key: str
    expected: str
    got: str

    def format(self) -> str:
        return f"{self.case}: {self.key} expected {self.expected}, got {self.got}"


@dataclass
class CorpusResult:
    cases: int = 0
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)
    audit: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.audit


def _parse_expectation(text: str, line: int) -> Expectation:
    key_part, sep, value = text.partition("=")
    if not sep:
        raise ParseError(f"Expected key=value, got '{text}' on line {line}", 0, text)
    key_part = key_part.strip()
    argument = None
    if key_part.endswith("]") and "[" in key_part:
        key_part, _, argument = key_part[:-1].partition("[")
        argument = argument.strip()
    key = key_part.strip()
    if key in COMPUTED_KEYS:
        if COMPUTED_KEYS[key] != (argument is not None):
            raise ParseError(f"Key '{key}' on line {line} has the wrong argument form", 0, text)
    elif key not in PROPERTY_KEYS or argument is not None:
        raise ParseError(f"Unknown property key '{key_part}' on line {line}", 0, text)
    return Expectation(key, argument, unquote(value.strip()))


def parse_corpus_line(text: str, line: int = 0) -> Optional[CorpusCase]:
    """A case, or None for blank and comment-only lines."""
    content = strip_comment(text).strip()
    if not content:
        return None
    name, sep, rest = content.partition(":")
    if not sep or not name.strip():
        raise ParseError(f"Expected 'name: ideal; expectations' on line {line}", 0, text)
    expression, _, expected = rest.partition(";")
    expectations = tuple(
        _parse_expectation(part, line) for part in split_top_level(expected) if part
    )
    return CorpusCase(name.strip(), expression.strip(), expectations, line)


def load_corpus(path: Union[str, Path] = DEFAULT_CORPUS) -> list[CorpusCase]:
    cases = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        case = parse_corpus_line(raw, lineno)
        if case is not None:
            cases.append(case)
    return cases


def _computed(
    expectation: Expectation, ideal: MonomialIdeal, caps: Caps, field_: FieldSpec
) -> str:
    key, arg = expectation.key, expectation.argument
    if key == "vars":
        return str(ideal.n)
    if key == "split_root":
        cert = is_vertex_splittable(ideal, SplitReading.LITERAL, caps).certificate
        if cert is None or cert.vertex is None:
            return "none"
        return ideal.variables.label(cert.vertex)
    if key == "wpm_under":
        return format_value(
            is_weakly_polymatroidal_under(ideal, parse_order(arg, ideal.variables))
        )
    if key == "pair_violates":
        order_text, u_text, v_text = (part.strip() for part in arg.split("|"))
        u = parse_monomial(u_text, ideal.variables)
        v = parse_monomial(v_text, ideal.variables)
        return format_value(pair_violates(ideal, parse_order(order_text, ideal.variables), u, v))
    colon = colon_by_monomial(ideal, parse_monomial(arg, ideal.variables))
    if key == "colon":
        return colon.format()
    return format_value(has_linear_resolution(colon, field_, caps))


def verify_case(
    case: CorpusCase,
    caps: Caps = DEFAULT_CAPS,
    field_: FieldSpec = RATIONALS,
    result: Optional[CorpusResult] = None,
) -> CorpusResult:
    """Check every expectation of one case, classifying the ideal at most once."""
    result = result or CorpusResult()
    result.cases += 1
    ideal = parse_ideal(case.expression, case.declared_vars, caps).ideal
    report: Optional[ClassificationReport] = None
    for expectation in case.expectations:
        if expectation.key in COMPUTED_KEYS:
            got = _computed(expectation, ideal, caps, field_)
        else:
            if report is None:
                report = classify(ideal, field_, caps)
                result.audit.extend(f"{case.name}: {msg}" for msg in report.audit)
            value = report.get(expectation.key)
            got = "absent" if value is None else format_value(value)
        result.checked += 1
        if got != expectation.expected:
            mismatch = Mismatch(case.name, expectation.label, expectation.expected, got)
            LOGGER.warning(mismatch.format())
            result.mismatches.append(mismatch)
    return result


def verify_corpus(
    cases: list[CorpusCase], caps: Caps = DEFAULT_CAPS, field_: FieldSpec = RATIONALS
) -> CorpusResult:
    result = CorpusResult()
    if not cases:
        result.warnings.append("corpus has no cases")
        LOGGER.warning("Corpus has no cases")
    for case in cases:
        LOGGER.debug(f"Verifying corpus case {case.name}")
        verify_case(case, caps, field_, result)
    return result
