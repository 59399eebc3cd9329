"""Vertex splittable ideals: I = x I_1 + I_2 with I_2 inside I_1, recursively.

Two readings are supported. LITERAL takes the splitting variable out of I_1, so x
may only appear to the first power in the generators it divides. RELAXED lets I_1 =
(u / x) keep powers of x, which is I : x whenever I_2 lies in I_1. Both agree on
squarefree ideals.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from monodec.classify.certificates import Certificate, CertificateKind, Decision
from monodec.config import DEFAULT_CAPS, Caps
from monodec.core.ideal import MonomialIdeal, minimalize
from monodec.errors import Verdict

LOGGER = logging.getLogger(__name__)


class SplitReading(Enum):
    LITERAL = "literal"
    RELAXED = "relaxed"


@dataclass(frozen=True)
class Split:
    """I = x * inner + outer at the variable `vertex`."""

    vertex: int
    inner: MonomialIdeal
    outer: MonomialIdeal

    def format(self, ideal: MonomialIdeal) -> str:
        label = ideal.variables.label(self.vertex)
        return f"{label}({self.inner.format()}) + ({self.outer.format()})"


def base_case(ideal: MonomialIdeal) -> Optional[str]:
    """Name of the trivially splittable case the ideal falls under, if any."""
    if ideal.is_zero:
        return "zero ideal"
    if ideal.is_unit:
        return "unit ideal"
    if ideal.is_principal:
        return "principal ideal"
    return None


def split_at(
    ideal: MonomialIdeal, vertex: int, reading: SplitReading = SplitReading.LITERAL
) -> Optional[Split]:
    """The split of I at one variable, or None when the non-recursive conditions fail."""
    divisible = [u for u in ideal.gens if u.exponents[vertex] > 0]
    outer_gens = [u for u in ideal.gens if u.exponents[vertex] == 0]
    if not divisible:
        return None
    if reading == SplitReading.LITERAL and any(u.exponents[vertex] > 1 for u in divisible):
        return None

    inner = minimalize((u.over_variable(vertex) for u in divisible), ideal.variables)
    outer = MonomialIdeal(ideal.variables, tuple(outer_gens))
    # G(I) is then the disjoint union of x G(I_1) and G(I_2): the u / x stay incomparable
    if len(inner.gens) != len(divisible) or not inner.contains_ideal(outer):
        return None
    return Split(vertex, inner, outer)


class _SplitSearch:
    def __init__(self, reading: SplitReading, budget: int) -> None:
        self.reading = reading
        self.relaxed = reading == SplitReading.RELAXED
        self.memo: dict[MonomialIdeal, Optional[Certificate]] = {}
        self.budget = budget
        self.examined = 0
        self.exhausted = False

    def run(self, ideal: MonomialIdeal) -> Optional[Certificate]:
        if ideal in self.memo:
            return self.memo[ideal]
        self.examined += 1
        if self.examined > self.budget:
            self.exhausted = True
            return None

        case = base_case(ideal)
        if case is not None:
            cert = Certificate.leaf(CertificateKind.SPLIT_TREE, case, self.relaxed)
            self.memo[ideal] = cert
            return cert

        result = None
        for vertex in sorted(ideal.used_variables):
            split = split_at(ideal, vertex, self.reading)
            if split is None:
                continue
            inner = self.run(split.inner)
            outer = self.run(split.outer) if inner is not None else None
            if self.exhausted:
                return None
            if inner is not None and outer is not None:
                result = Certificate(
                    CertificateKind.SPLIT_TREE,
                    vertex=vertex,
                    children=(inner, outer),
                    relaxed=self.relaxed,
                )
                break
        self.memo[ideal] = result
        return result


def is_vertex_splittable(
    ideal: MonomialIdeal,
    reading: SplitReading = SplitReading.LITERAL,
    caps: Caps = DEFAULT_CAPS,
) -> Decision:
    """Search the splitting variables in ascending order; the certificate is the split tree."""
    search = _SplitSearch(reading, caps.search_budget)
    cert = search.run(ideal)
    if search.exhausted:
        LOGGER.warning(f"Splitting search for {ideal} ran out of budget")
        return Decision.undecided(f"search_budget={caps.search_budget} exhausted", search.examined)
    if cert is None:
        LOGGER.debug(f"{ideal} has no {reading.value} splitting ({search.examined} ideals)")
        return Decision(
            Verdict.FALSE,
            Certificate.refutation(f"no {reading.value} splitting variable works"),
            search.examined,
        )
    return Decision(Verdict.TRUE, cert, search.examined)


def reading_disagreement(ideal: MonomialIdeal, caps: Caps = DEFAULT_CAPS) -> Optional[str]:
    """A note when the literal and relaxed readings decide an ideal differently."""
    literal = is_vertex_splittable(ideal, SplitReading.LITERAL, caps)
    relaxed = is_vertex_splittable(ideal, SplitReading.RELAXED, caps)
    if not (literal.decided and relaxed.decided) or literal.verdict == relaxed.verdict:
        return None
    return (
        f"{ideal}: literal splitting {literal.verdict.value}, "
        f"relaxed splitting {relaxed.verdict.value}"
    )
