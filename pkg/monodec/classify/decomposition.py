"""Vertex decomposability and shellability of simplicial complexes."""

import logging
from typing import Optional, Sequence

from monodec.classify.certificates import Certificate, CertificateKind, Decision
from monodec.config import DEFAULT_CAPS, Caps
from monodec.core.complex import SimplicialComplex, deletion, link
from monodec.core.monomial import VarSubset, subset_to_mask
from monodec.errors import NotAVertexError, OrderError, Verdict

LOGGER = logging.getLogger(__name__)


def is_shedding_vertex(complex_: SimplicialComplex, vertex: int) -> bool:
    """No facet of del(x) is a face of lk(x)."""
    if vertex not in complex_.vertices:
        raise NotAVertexError(f"{complex_.variables.label(vertex)} is not a vertex of {complex_}")
    lk = link(complex_, [vertex])
    return not any(lk.contains_mask(f) for f in deletion(complex_, [vertex]).masks)


class _DecompositionSearch:
    def __init__(self, budget: int) -> None:
        self.memo: dict[SimplicialComplex, Optional[Certificate]] = {}
        self.budget = budget
        self.examined = 0
        self.exhausted = False

    def run(self, complex_: SimplicialComplex) -> Optional[Certificate]:
        if complex_ in self.memo:
            return self.memo[complex_]
        self.examined += 1
        if self.examined > self.budget:
            self.exhausted = True
            return None

        if complex_.is_simplex:
            cert = Certificate.leaf(CertificateKind.DECOMPOSITION_TREE, _simplex_note(complex_))
            self.memo[complex_] = cert
            return cert

        result = None
        for vertex in sorted(complex_.vertices):
            if not is_shedding_vertex(complex_, vertex):
                continue
            lk = self.run(link(complex_, [vertex]))
            dl = self.run(deletion(complex_, [vertex])) if lk is not None else None
            if self.exhausted:
                return None
            if lk is not None and dl is not None:
                result = Certificate(
                    CertificateKind.DECOMPOSITION_TREE, vertex=vertex, children=(lk, dl)
                )
                break
        self.memo[complex_] = result
        return result


def _simplex_note(complex_: SimplicialComplex) -> str:
    if complex_.is_void:
        return "void complex"
    if complex_.is_irrelevant:
        return "irrelevant complex"
    return "simplex"


def is_vertex_decomposable(complex_: SimplicialComplex, caps: Caps = DEFAULT_CAPS) -> Decision:
    """A simplex (void and irrelevant included), or a shedding vertex whose link and
    deletion are both vertex decomposable."""
    search = _DecompositionSearch(caps.search_budget)
    cert = search.run(complex_)
    if search.exhausted:
        LOGGER.warning(f"Decomposition search for {complex_} ran out of budget")
        return Decision.undecided(
            f"search_budget={caps.search_budget} exhausted", search.examined
        )
    if cert is None:
        return Decision(
            Verdict.FALSE,
            Certificate.refutation("no shedding vertex leads to a decomposition"),
            search.examined,
        )
    return Decision(Verdict.TRUE, cert, search.examined)


def _codim_one_vertices(facet: int, earlier: Sequence[int]) -> int:
    """Vertices x of F with F minus G = {x} for some earlier facet G, as a mask."""
    found = 0
    for g in earlier:
        rest = facet & ~g
        if rest and rest & (rest - 1) == 0:
            found |= rest
    return found


def _shelling_step_ok(facet: int, earlier: Sequence[int]) -> bool:
    """Every earlier F_i leaves some x in F_j minus F_i with F_j minus F_l = {x}."""
    reachable = _codim_one_vertices(facet, earlier)
    return all(facet & ~g & reachable for g in earlier)


def check_facet_order(
    complex_: SimplicialComplex, order: Sequence[VarSubset]
) -> tuple[VarSubset, ...]:
    order = tuple(frozenset(f) for f in order)
    if len(order) != len(complex_.facets) or set(order) != set(complex_.facets):
        raise OrderError(f"Facet order is not a permutation of the facets of {complex_}")
    return order


def first_shelling_failure(
    complex_: SimplicialComplex, order: Sequence[VarSubset]
) -> Optional[int]:
    """Position of the first facet breaking the shelling condition, or None."""
    masks = [subset_to_mask(f) for f in check_facet_order(complex_, order)]
    for j in range(1, len(masks)):
        if not _shelling_step_ok(masks[j], masks[:j]):
            return j
    return None


def is_shelling_order(complex_: SimplicialComplex, order: Sequence[VarSubset]) -> bool:
    return first_shelling_failure(complex_, order) is None


class _ShellingSearch:
    """Backtracking over facet sequences; the step condition only sees the earlier set."""

    def __init__(self, complex_: SimplicialComplex, budget: Optional[int]) -> None:
        self.masks = complex_.masks
        self.full = (1 << len(self.masks)) - 1
        self.failed: set[int] = set()
        self.budget = budget
        self.examined = 0
        self.exhausted = False

    def run(self, prefix: list[int], chosen: int) -> Optional[list[int]]:
        if chosen == self.full:
            return prefix
        if chosen in self.failed:
            return None
        self.examined += 1
        if self.budget is not None and self.examined > self.budget:
            self.exhausted = True
            return None

        earlier = [self.masks[i] for i in prefix]
        for k, facet in enumerate(self.masks):
            if chosen >> k & 1 or not _shelling_step_ok(facet, earlier):
                continue
            found = self.run(prefix + [k], chosen | (1 << k))
            if found is not None or self.exhausted:
                return found
        self.failed.add(chosen)
        return None


def is_shellable(complex_: SimplicialComplex, caps: Caps = DEFAULT_CAPS) -> Decision:
    """A shelling order of the facets (non-pure condition), or a refutation.

    The void complex counts as shellable with the empty order. Above `max_facets`
    facets the search runs under `search_budget`.
    """
    over_cap = len(complex_.facets) > caps.max_facets
    search = _ShellingSearch(complex_, caps.search_budget if over_cap else None)
    found = search.run([], 0)

    if found is not None:
        order = tuple(complex_.facets[k] for k in found)
        return Decision(
            Verdict.TRUE,
            Certificate(CertificateKind.SHELLING_ORDER, order=order),
            search.examined,
        )
    if search.exhausted:
        LOGGER.warning(f"Shelling search for {complex_} ran out of budget")
        return Decision.undecided(
            f"{len(complex_.facets)} facets exceed max_facets={caps.max_facets}", search.examined
        )
    return Decision(
        Verdict.FALSE,
        Certificate.refutation(f"no order of the {len(complex_.facets)} facets is a shelling"),
        search.examined,
    )
