"""Exchange properties: polymatroidal, matroidal and weakly polymatroidal ideals.

Variable orders list variable indices from greatest to smallest.
"""

import logging
from dataclasses import dataclass
from math import factorial
from typing import Optional, Sequence

from monodec.classify.certificates import Certificate, CertificateKind, Decision
from monodec.config import DEFAULT_CAPS, Caps
from monodec.core.ideal import MonomialIdeal
from monodec.core.monomial import Monomial
from monodec.errors import DegenerateIdealError, OrderError, Verdict

LOGGER = logging.getLogger(__name__)


def _require_nonzero(ideal: MonomialIdeal, operation: str) -> None:
    if ideal.is_zero:
        raise DegenerateIdealError(f"{operation} needs a nonzero ideal")


def check_variable_order(order: Sequence[int], n: int) -> tuple[int, ...]:
    order = tuple(order)
    if sorted(order) != list(range(n)):
        raise OrderError(f"Variable order {list(order)} is not a permutation of {n} variables")
    return order


def is_polymatroidal(ideal: MonomialIdeal) -> bool:
    """Single degree, and for u, v in G(I) with a_i > b_i some j with a_j < b_j has
    x_j (u / x_i) in G(I)."""
    _require_nonzero(ideal, "is_polymatroidal")
    if not ideal.is_single_degree:
        return False
    gens = set(ideal.gens)
    for u in ideal.gens:
        for v in ideal.gens:
            if u == v:
                continue
            for i in range(ideal.n):
                if u.exponents[i] <= v.exponents[i]:
                    continue
                shifted = u.over_variable(i)
                if not any(
                    u.exponents[j] < v.exponents[j] and shifted.times_variable(j) in gens
                    for j in range(ideal.n)
                ):
                    LOGGER.debug(f"Exchange fails for {u}, {v} at variable {i}")
                    return False
    return True


def is_matroidal(ideal: MonomialIdeal) -> bool:
    return is_polymatroidal(ideal) and ideal.is_squarefree


@dataclass(frozen=True)
class WpmViolation:
    """A generator pair breaking the weak exchange at the variable `variable`."""

    u: Monomial
    v: Monomial
    variable: int

    def format(self, ideal: MonomialIdeal) -> str:
        names = ideal.variables
        return f"({self.u.format(names)}, {self.v.format(names)}) at {names.label(self.variable)}"


def _first_difference(u: Monomial, v: Monomial, order: Sequence[int]) -> Optional[int]:
    for pos, idx in enumerate(order):
        if u.exponents[idx] != v.exponents[idx]:
            return pos
    return None


def _has_exchange(ideal: MonomialIdeal, v: Monomial, var: int, later: Sequence[int]) -> bool:
    """Some later variable x_j divides v with x_var (v / x_j) in I."""
    return any(
        v.exponents[j] > 0 and ideal.contains(v.over_variable(j).times_variable(var))
        for j in later
    )


def pair_violates(ideal: MonomialIdeal, order: Sequence[int], u: Monomial, v: Monomial) -> bool:
    """Whether the ordered pair (u, v) breaks the weak exchange under `order`.

    Only a pair whose first difference favours u can violate; membership is tested
    in the whole ideal.
    """
    order = check_variable_order(order, ideal.n)
    t = _first_difference(u, v, order)
    if t is None or u.exponents[order[t]] <= v.exponents[order[t]]:
        return False
    return not _has_exchange(ideal, v, order[t], order[t + 1 :])


def wpm_violation(ideal: MonomialIdeal, order: Sequence[int]) -> Optional[WpmViolation]:
    """The first violating pair in canonical generator order, or None."""
    _require_nonzero(ideal, "wpm_violation")
    order = check_variable_order(order, ideal.n)
    for u in ideal.gens:
        for v in ideal.gens:
            if u != v and pair_violates(ideal, order, u, v):
                t = _first_difference(u, v, order)
                return WpmViolation(u, v, order[t])
    return None


def is_weakly_polymatroidal_under(ideal: MonomialIdeal, order: Sequence[int]) -> bool:
    return wpm_violation(ideal, order) is None


class _OrderSearch:
    """Depth-first search over variable-order prefixes.

    A pair whose first difference sits at position t is decided once positions
    0..t are fixed, and which pairs are still tied depends only on the set of the
    prefix, so failed prefix sets are memoized.
    """

    def __init__(self, ideal: MonomialIdeal, budget: Optional[int]) -> None:
        self.ideal = ideal
        self.n = ideal.n
        self.pairs = [(u, v) for u in ideal.gens for v in ideal.gens if u != v]
        self.failed: set[int] = set()
        self.budget = budget
        self.examined = 0
        self.covered = 0
        self.exhausted = False

    def _tied(self, prefix_mask: int) -> list[tuple[Monomial, Monomial]]:
        return [
            (u, v)
            for u, v in self.pairs
            if all(
                u.exponents[i] == v.exponents[i] for i in range(self.n) if prefix_mask >> i & 1
            )
        ]

    def _extension_ok(self, prefix_mask: int, var: int) -> bool:
        placed = prefix_mask | (1 << var)
        later = [j for j in range(self.n) if not placed >> j & 1]
        for u, v in self._tied(prefix_mask):
            if u.exponents[var] > v.exponents[var] and not _has_exchange(
                self.ideal, v, var, later
            ):
                return False
        return True

    def run(self, prefix: list[int], prefix_mask: int) -> Optional[tuple[int, ...]]:
        if len(prefix) == self.n:
            return tuple(prefix)
        remaining = factorial(self.n - len(prefix) - 1)
        for var in range(self.n):
            if prefix_mask >> var & 1:
                continue
            if self.budget is not None and self.examined >= self.budget:
                self.exhausted = True
                return None
            self.examined += 1
            mask = prefix_mask | (1 << var)
            if mask in self.failed or not self._extension_ok(prefix_mask, var):
                self.covered += remaining
                continue
            found = self.run(prefix + [var], mask)
            if found is not None or self.exhausted:
                return found
            self.failed.add(mask)
        return None


def find_wpm_order(ideal: MonomialIdeal, caps: Caps = DEFAULT_CAPS) -> Decision:
    """A variable order under which I is weakly polymatroidal, or a refutation covering
    all n! orders. Above `max_orderings` variables only a found order is conclusive."""
    _require_nonzero(ideal, "find_wpm_order")
    over_cap = ideal.n > caps.max_orderings
    search = _OrderSearch(ideal, caps.search_budget if over_cap else None)
    found = search.run([], 0)

    if found is not None:
        LOGGER.debug(f"Weakly polymatroidal order for {ideal} after {search.examined} steps")
        return Decision(
            Verdict.TRUE,
            Certificate(CertificateKind.WPM_ORDER, order=found),
            examined=search.examined,
        )
    if over_cap or search.exhausted:
        LOGGER.warning(f"Variable-order search for {ideal} stopped at the cap")
        return Decision.undecided(
            f"{ideal.n} variables exceed max_orderings={caps.max_orderings}", search.examined
        )
    note = f"all {search.covered} variable orders fail the weak exchange"
    return Decision(
        Verdict.FALSE,
        Certificate.refutation(note),
        examined=search.examined,
        orders_covered=search.covered,
    )
