"""Linear quotients: checking a generator order and searching for one."""

import logging
from typing import Optional, Sequence

from monodec.classify.certificates import Certificate, CertificateKind, Decision
from monodec.config import DEFAULT_CAPS, Caps
from monodec.core.ideal import MonomialIdeal, minimalize
from monodec.core.monomial import Monomial
from monodec.errors import DegenerateIdealError, OrderError, Verdict

LOGGER = logging.getLogger(__name__)


def check_generator_order(
    ideal: MonomialIdeal, order: Sequence[Monomial]
) -> tuple[Monomial, ...]:
    order = tuple(order)
    if len(order) != len(ideal.gens) or set(order) != set(ideal.gens):
        raise OrderError(f"Generator order is not a permutation of G({ideal.format()})")
    return order


def successive_colon(
    ideal: MonomialIdeal, earlier: Sequence[Monomial], u: Monomial
) -> MonomialIdeal:
    """(u_1, ..., u_{j-1}) : u_j, generated by u_i / gcd(u_i, u_j)."""
    return minimalize((w.quotient(u) for w in earlier), ideal.variables)


def _is_linear_step(ideal: MonomialIdeal, earlier: Sequence[Monomial], u: Monomial) -> bool:
    return all(g.degree == 1 for g in successive_colon(ideal, earlier, u).gens)


def first_nonlinear_step(ideal: MonomialIdeal, order: Sequence[Monomial]) -> Optional[int]:
    """Position of the first generator whose colon is not variable-generated, or None."""
    order = check_generator_order(ideal, order)
    for j in range(1, len(order)):
        if not _is_linear_step(ideal, order[:j], order[j]):
            return j
    return None


def has_linear_quotients_under(ideal: MonomialIdeal, order: Sequence[Monomial]) -> bool:
    if ideal.is_zero:
        raise DegenerateIdealError("has_linear_quotients_under needs a nonzero ideal")
    return first_nonlinear_step(ideal, order) is None


class _QuotientSearch:
    """Backtracking over which generator extends the prefix.

    Whether a generator may come next depends only on the set already placed, so
    failed sets are memoized as bitmasks over G(I).
    """

    def __init__(self, ideal: MonomialIdeal, budget: Optional[int]) -> None:
        self.ideal = ideal
        self.gens = ideal.gens
        self.full = (1 << len(self.gens)) - 1
        self.failed: set[int] = set()
        self.budget = budget
        self.examined = 0
        self.exhausted = False

    def run(self, prefix: list[int], mask: int) -> Optional[list[int]]:
        if mask == self.full:
            return prefix
        if mask in self.failed:
            return None
        self.examined += 1
        if self.budget is not None and self.examined > self.budget:
            self.exhausted = True
            return None

        earlier = [self.gens[i] for i in prefix]
        for k, u in enumerate(self.gens):
            if mask >> k & 1:
                continue
            if prefix and not _is_linear_step(self.ideal, earlier, u):
                continue
            found = self.run(prefix + [k], mask | (1 << k))
            if found is not None or self.exhausted:
                return found
        self.failed.add(mask)
        return None


def find_lq_order(ideal: MonomialIdeal, caps: Caps = DEFAULT_CAPS) -> Decision:
    """A linear-quotients order of G(I), or a refutation that none exists.

    Above `max_lq_generators` generators the search runs under `search_budget` and an
    unfinished search is undecided.
    """
    if ideal.is_zero:
        raise DegenerateIdealError("find_lq_order needs a nonzero ideal")
    over_cap = len(ideal.gens) > caps.max_lq_generators
    search = _QuotientSearch(ideal, caps.search_budget if over_cap else None)
    found = search.run([], 0)

    if found is not None:
        order = tuple(ideal.gens[k] for k in found)
        return Decision(
            Verdict.TRUE, Certificate(CertificateKind.LQ_ORDER, order=order), search.examined
        )
    if search.exhausted:
        LOGGER.warning(f"Linear-quotients search for {ideal} ran out of budget")
        return Decision.undecided(
            f"{len(ideal.gens)} generators exceed max_lq_generators={caps.max_lq_generators}",
            search.examined,
        )
    LOGGER.debug(f"No linear-quotients order for {ideal} ({search.examined} prefix sets)")
    return Decision(
        Verdict.FALSE,
        Certificate.refutation(
            f"no order of the {len(ideal.gens)} generators has linear quotients"
        ),
        search.examined,
    )
