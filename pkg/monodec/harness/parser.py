"""Parsing ideal expressions such as "x1*x2, x2^2*x3" and variable orders "x3>x1>x2".

    ideal    := "0" | "1" | monomial ("," monomial)*
    monomial := factor ("*" factor)*
    factor   := "x" INT ("^" INT)?

Whitespace is ignored. Without a declared variable count the largest index seen
fixes the ring, which may hold at most `Caps.max_variables` variables.
"""

from dataclasses import dataclass
from typing import Optional

from monodec.classify.exchange import check_variable_order
from monodec.core.ideal import MonomialIdeal, minimalize
from monodec.core.monomial import Monomial, VariableSet
from monodec.config import DEFAULT_CAPS, Caps
from monodec.errors import ParseError, ResourceCapError


@dataclass(frozen=True)
class IdealExpression:
    source: str
    ideal: MonomialIdeal
    declared: bool

    @property
    def n(self) -> int:
        return self.ideal.n

    def format(self) -> str:
        return self.ideal.format()


MAX_DIGITS = 18


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_spaces()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message: str, position: Optional[int] = None) -> ParseError:
        return ParseError(message, self.pos if position is None else position, self.text)

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = self.peek() or "end of input"
            raise self.error(f"Expected '{char}', found '{found}'")
        self.pos += 1

    def integer(self) -> int:
        self.skip_spaces()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("Expected an integer")
        if self.pos - start > MAX_DIGITS:
            raise self.error("Integer too large", start)
        return int(self.text[start : self.pos])


def _factor(scanner: _Scanner, exponents: dict[int, int]) -> None:
    scanner.peek()
    start = scanner.pos
    scanner.expect("x")
    index = scanner.integer()
    if index == 0:
        raise scanner.error("Variable indices start at 1", start)
    power = 1
    if scanner.peek() == "^":
        scanner.pos += 1
        exp_start = scanner.pos
        power = scanner.integer()
        if power == 0:
            raise scanner.error("Exponent 0 is not allowed", exp_start)
    exponents[index] = exponents.get(index, 0) + power


def _monomial(scanner: _Scanner) -> tuple[dict[int, int], int]:
    scanner.peek()
    start = scanner.pos
    exponents: dict[int, int] = {}
    _factor(scanner, exponents)
    while scanner.peek() == "*":
        scanner.pos += 1
        _factor(scanner, exponents)
    return exponents, start


def parse_ideal(
    text: str, n_vars: Optional[int] = None, caps: Caps = DEFAULT_CAPS
) -> IdealExpression:
    """Parse and minimalize an ideal expression.

    Raises ResourceCapError before building exponent vectors for a ring larger than
    `caps.max_variables`.
    """
    if n_vars is not None and n_vars < 1:
        raise ParseError(f"The ring needs at least one variable, got {n_vars}", 0, text)
    if n_vars is not None and n_vars > caps.max_variables:
        raise ResourceCapError("ring size", caps.max_variables, n_vars)
    stripped = text.strip()
    if stripped in ("0", "1"):
        variables = VariableSet.standard(n_vars or 1)
        ideal = MonomialIdeal.zero(variables) if stripped == "0" else MonomialIdeal.unit(variables)
        return IdealExpression(text, ideal, n_vars is not None)

    scanner = _Scanner(text)
    if not scanner.peek():
        raise scanner.error("Empty ideal expression")
    parsed = [_monomial(scanner)]
    while scanner.peek() == ",":
        scanner.pos += 1
        parsed.append(_monomial(scanner))
    if scanner.peek():
        raise scanner.error(f"Unexpected '{scanner.peek()}'")

    largest = max(max(exps) for exps, _ in parsed)
    n = largest if n_vars is None else n_vars
    if n > caps.max_variables:
        raise ResourceCapError("ring size", caps.max_variables, n)
    if largest > n:
        for exps, start in parsed:
            if max(exps) > n:
                raise ParseError(f"x{max(exps)} exceeds the declared {n} variables", start, text)

    gens = []
    for exps, _ in parsed:
        gens.append(Monomial(tuple(exps.get(i, 0) for i in range(1, n + 1))))
    return IdealExpression(text, minimalize(gens, VariableSet.standard(n)), n_vars is not None)


def parse_monomial(text: str, variables: VariableSet) -> Monomial:
    """A single monomial over an existing ring, for colon arguments."""
    expr = parse_ideal(text, variables.n, Caps(max_variables=variables.n))
    if len(expr.ideal.gens) != 1:
        raise ParseError(f"Expected one monomial, got '{text}'", 0, text)
    return expr.ideal.gens[0]


def parse_order(text: str, variables: VariableSet) -> tuple[int, ...]:
    """A variable order written greatest first, e.g. "x3>x1>x2>x4"."""
    labels = [part.strip() for part in text.split(">")]
    order = []
    offset = 0
    for label in labels:
        if label not in variables.names:
            raise ParseError(f"Unknown variable '{label}'", text.find(label, offset), text)
        offset = text.find(label, offset) + len(label)
        order.append(variables.names.index(label))
    return check_variable_order(order, variables.n)
