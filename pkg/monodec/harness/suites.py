"""Enumeration suites: families of ideals on which known equivalences must hold.

Each suite enumerates its family up to relabeling of the variables, decides the
properties involved and reports every instance where they disagree. A failure means
a bug in this package.
"""

import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator, Optional

import networkx as nx

from monodec.classify import reference
from monodec.classify.certificates import CertificateKind, Decision
from monodec.classify.chordal import is_chordal_complement_oracle
from monodec.classify.decomposition import is_shellable, is_vertex_decomposable
from monodec.classify.exchange import find_wpm_order, is_matroidal
from monodec.classify.quotients import find_lq_order
from monodec.classify.splitting import SplitReading, is_vertex_splittable, reading_disagreement
from monodec.classify.verify import Subject, verify_certificate
from monodec.config import DEFAULT_CAPS, Caps
from monodec.core.complex import alexander_dual, stanley_reisner_complex
from monodec.core.field import RATIONALS, FieldSpec
from monodec.core.ideal import MonomialIdeal, minimalize
from monodec.core.monomial import Monomial, VariableSet, mask_to_subset
from monodec.errors import ResourceCapError
from monodec.homology.betti import (
    BettiTable,
    betti_table,
    euler_mismatches,
    generator_degree_mismatches,
    hilbert_numerator,
    is_componentwise_linear,
)

LOGGER = logging.getLogger(__name__)

# Largest n each suite accepts; the enumerations grow quickly past these.
SUITE_LIMITS = {
    "matroidal": 5,
    "few-generators": 5,
    "covering-supports": 6,
    "quadratic": 6,
    "duality": 6,
}


class Suite(str, Enum):
    MATROIDAL = "matroidal"
    FEW_GENERATORS = "few-generators"
    COVERING_SUPPORTS = "covering-supports"
    QUADRATIC = "quadratic"
    DUALITY = "duality"


@dataclass
class SuiteResult:
    suite: str
    n: int
    instances: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    counts: Counter = field(default_factory=Counter)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, ideal: MonomialIdeal, message: str) -> None:
        LOGGER.error(f"{self.suite}: {ideal}: {message}")
        self.failures.append(f"{ideal}: {message}")

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "instances": self.instances,
            "counts": dict(sorted(self.counts.items())),
            "failures": list(self.failures),
            "notes": list(self.notes),
        }


def canonical_form(ideal: MonomialIdeal) -> tuple:
    """Smallest sorted exponent table over all relabelings of the variables."""
    best = None
    for perm in permutations(range(ideal.n)):
        key = tuple(sorted(g.permuted(perm) for g in ideal.gens))
        if best is None or key < best:
            best = key
    return best


def unique_up_to_relabeling(ideals: Iterable[MonomialIdeal]) -> Iterator[MonomialIdeal]:
    seen = set()
    for ideal in ideals:
        key = canonical_form(ideal)
        if key not in seen:
            seen.add(key)
            yield ideal


def _ideal_from_masks(n: int, masks: Iterable[int]) -> MonomialIdeal:
    return minimalize(
        (Monomial.from_subset(n, mask_to_subset(m)) for m in masks), VariableSet.standard(n)
    )


def _is_antichain(masks: tuple[int, ...]) -> bool:
    return all(a & b != a and a & b != b for a, b in combinations(masks, 2))


def _check_certificate(result: SuiteResult, ideal: MonomialIdeal, decision: Decision,
                       subject: Subject, what: str) -> None:
    cert = decision.certificate
    if decision.holds and cert is not None and cert.kind != CertificateKind.REFUTATION:
        if not verify_certificate(cert, subject):
            result.fail(ideal, f"{what} certificate fails replay")


def _homology_checks(result: SuiteResult, ideal: MonomialIdeal, field_: FieldSpec,
                     caps: Caps) -> Optional[BettiTable]:
    """Audit the Betti table against beta_0 and the Euler identity; None when capped."""
    try:
        table = betti_table(ideal, field_, caps)
    except ResourceCapError as e:
        result.notes.append(f"{ideal}: homology checks skipped ({e})")
        return None
    if generator_degree_mismatches(table):
        result.fail(ideal, "beta_0 differs from the generator degrees")
    try:
        numerator = hilbert_numerator(ideal, caps)
    except ResourceCapError as e:
        result.notes.append(f"{ideal}: Euler check skipped ({e})")
        return table
    if euler_mismatches(table, numerator):
        result.fail(ideal, "Euler characteristic mismatch")
    return table


# families


def uniform_matroid_ideals(n: int) -> Iterator[MonomialIdeal]:
    """Squarefree Veronese ideals: the bases of U(r, m) for m <= n."""
    for m in range(1, n + 1):
        for r in range(1, m + 1):
            yield MonomialIdeal.from_subsets(VariableSet.standard(m), combinations(range(m), r))


def _integer_partitions(total: int, largest: Optional[int] = None) -> Iterator[list[int]]:
    largest = total if largest is None else largest
    if total == 0:
        yield []
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _integer_partitions(total - part, part):
            yield [part] + rest


def transversal_matroid_ideals(n: int) -> Iterator[MonomialIdeal]:
    """Products of primes on disjoint blocks of variables, one block shape per partition."""
    for m in range(1, n + 1):
        for shape in _integer_partitions(m):
            blocks, start = [], 0
            for size in shape:
                blocks.append(range(start, start + size))
                start += size
            product = [frozenset(choice) for choice in _choices(blocks)]
            yield MonomialIdeal.from_subsets(VariableSet.standard(m), product)


def _choices(blocks: list[range]) -> Iterator[tuple[int, ...]]:
    if not blocks:
        yield ()
        return
    for v in blocks[0]:
        for rest in _choices(blocks[1:]):
            yield (v,) + rest


def graphic_matroid_ideals(n: int) -> Iterator[MonomialIdeal]:
    """Spanning-tree ideals of connected simple graphs with at most n edges.

    Every graphic matroid is the cycle matroid of a connected graph, so the
    disconnected ones add nothing.
    """
    for graph in nx.graph_atlas_g():
        m = graph.number_of_edges()
        if m == 0 or m > n or not nx.is_connected(graph):
            continue
        edges = list(graph.edges)
        rank = graph.number_of_nodes() - 1
        bases = []
        for subset in combinations(range(m), rank):
            forest = nx.Graph()
            forest.add_nodes_from(graph)
            forest.add_edges_from(edges[i] for i in subset)
            if nx.is_forest(forest):
                bases.append(subset)
        yield MonomialIdeal.from_subsets(VariableSet.standard(m), bases)


def few_generator_ideals(n: int, max_gens: int = 3) -> Iterator[MonomialIdeal]:
    masks = range(1, 1 << n)
    for count in range(1, max_gens + 1):
        for chosen in combinations(masks, count):
            if _is_antichain(chosen):
                yield _ideal_from_masks(n, chosen)


def covering_support_ideals(n: int) -> Iterator[MonomialIdeal]:
    """Ideals whose generator supports pairwise cover all variables.

    Pairwise covering supports have pairwise disjoint complements, so up to
    relabeling such an ideal is fixed by the sizes of those complements.
    """
    full = (1 << n) - 1
    for total in range(1, n + 1):
        for shape in _integer_partitions(total):
            if len(shape) == 1 and total == n:
                continue
            masks, start = [], 0
            for size in shape:
                block = ((1 << size) - 1) << start
                masks.append(full & ~block)
                start += size
            yield _ideal_from_masks(n, masks)


def _automorphisms(graph: nx.Graph) -> list[dict]:
    return list(nx.algorithms.isomorphism.GraphMatcher(graph, graph).isomorphisms_iter())


def _square_set_orbits(graph: nx.Graph) -> Iterator[tuple[int, ...]]:
    """One vertex subset per orbit of the graph's automorphism group."""
    automorphisms = _automorphisms(graph)
    seen: set[tuple[int, ...]] = set()
    for k in range(graph.number_of_nodes() + 1):
        for subset in combinations(sorted(graph.nodes), k):
            if subset in seen:
                continue
            seen.update(tuple(sorted(sigma[v] for v in subset)) for sigma in automorphisms)
            yield subset


def quadratic_ideals(n: int, squares: bool = False) -> Iterator[MonomialIdeal]:
    """Edge ideals of the graphs on n vertices, optionally with squares of some vertices.

    Graphs come up to isomorphism from the networkx atlas. Atlas graphs are pairwise
    non-isomorphic, so two square sets on the same graph give isomorphic ideals exactly
    when an automorphism of the graph maps one onto the other.
    """
    variables = VariableSet.standard(n)
    for graph in nx.graph_atlas_g():
        if graph.number_of_nodes() != n:
            continue
        square_sets = _square_set_orbits(graph) if squares else iter([()])
        for squared in square_sets:
            if graph.number_of_edges() == 0 and not squared:
                continue
            gens = [Monomial.from_subset(n, e) for e in graph.edges]
            gens.extend(Monomial.from_subset(n, [v]).times_variable(v) for v in squared)
            yield minimalize(gens, variables)


# suites


def _run_matroidal(n: int, caps: Caps, field_: FieldSpec, result: SuiteResult) -> None:
    families = (uniform_matroid_ideals(n), transversal_matroid_ideals(n), graphic_matroid_ideals(n))
    for ideal in unique_up_to_relabeling(ideal for family in families for ideal in family):
        result.instances += 1
        if not is_matroidal(ideal):
            result.fail(ideal, "generated family member is not matroidal")
            continue
        complex_ = stanley_reisner_complex(ideal)
        dual = alexander_dual(ideal)
        decomposable = is_vertex_decomposable(complex_, caps)
        shellable = is_shellable(complex_, caps)
        _check_certificate(result, ideal, decomposable, complex_, "decomposition")
        _check_certificate(result, ideal, shellable, complex_, "shelling")
        if not (decomposable.decided and shellable.decided):
            result.notes.append(f"{ideal}: undecided under the caps")
            continue
        sequentially_cm = is_componentwise_linear(dual, field_, caps)
        values = (sequentially_cm, shellable.holds, decomposable.holds)
        if len(set(values)) > 1:
            result.fail(ideal, f"sequentially CM / shellable / decomposable = {values}")
        result.counts["vertex_decomposable" if decomposable.holds else "not_decomposable"] += 1
        splitting = is_vertex_splittable(ideal, SplitReading.LITERAL, caps)
        if splitting.refuted:
            result.fail(ideal, "matroidal but not vertex splittable")


def _run_decomposable_family(ideals: Iterable[MonomialIdeal], caps: Caps,
                             result: SuiteResult) -> None:
    for ideal in unique_up_to_relabeling(ideals):
        result.instances += 1
        complex_ = stanley_reisner_complex(ideal)
        decision = is_vertex_decomposable(complex_, caps)
        _check_certificate(result, ideal, decision, complex_, "decomposition")
        if decision.refuted:
            result.fail(ideal, "complex is not vertex decomposable")
        elif not decision.decided:
            result.notes.append(f"{ideal}: undecided under the caps")
        else:
            bridge = is_vertex_splittable(alexander_dual(ideal), SplitReading.LITERAL, caps)
            if bridge.refuted:
                result.fail(ideal, "dual is not vertex splittable")
            result.counts["vertex_decomposable"] += 1


def _run_quadratic(n: int, caps: Caps, field_: FieldSpec, squares: bool,
                   result: SuiteResult) -> None:
    for ideal in quadratic_ideals(n, squares):
        result.instances += 1
        wpm = find_wpm_order(ideal, caps)
        relaxed = is_vertex_splittable(ideal, SplitReading.RELAXED, caps)
        # the readings coincide on squarefree ideals
        literal = (
            relaxed if ideal.is_squarefree
            else is_vertex_splittable(ideal, SplitReading.LITERAL, caps)
        )
        quotients = find_lq_order(ideal, caps)
        for decision, what in ((wpm, "variable order"), (relaxed, "split"), (quotients, "order")):
            _check_certificate(result, ideal, decision, ideal, what)
        table = _homology_checks(result, ideal, field_, caps)
        if table is None or not all(d.decided for d in (wpm, relaxed, literal, quotients)):
            result.notes.append(f"{ideal}: undecided under the caps")
            continue
        values = {
            "weakly_polymatroidal": wpm.holds,
            "vertex_splittable": relaxed.holds,
            "linear_quotients": quotients.holds,
            "linear_resolution": table.regularity == 2,
        }
        if ideal.is_squarefree:
            values["complement_chordal"] = is_chordal_complement_oracle(ideal)
        if len(set(values.values())) > 1:
            result.fail(ideal, f"four-way equivalence broken: {values}")
        if literal.holds != relaxed.holds:
            result.notes.append(reading_disagreement(ideal, caps))
        result.counts["linear" if values["linear_resolution"] else "not_linear"] += 1


def random_squarefree_ideal(rng: random.Random, n: int) -> Optional[MonomialIdeal]:
    count = rng.randint(1, 2 * n)
    masks = [rng.randint(1, (1 << n) - 1) for _ in range(count)]
    ideal = _ideal_from_masks(n, masks)
    return ideal if ideal.is_proper_nonzero else None


def _confirm(result: SuiteResult, ideal: MonomialIdeal, decision: Decision,
             exhaustive: Callable[[], bool], what: str) -> None:
    """A refutation must be reproduced by the exhaustive reference search."""
    if decision.refuted and exhaustive():
        result.fail(ideal, f"{what} refuted, but the exhaustive search finds a witness")
    if decision.refuted:
        result.counts["refutations_confirmed"] += 1


def _run_duality(n: int, caps: Caps, field_: FieldSpec, count: int, seed: int,
                 result: SuiteResult) -> None:
    rng = random.Random(seed)
    limit = reference.REFERENCE_LIMIT
    while result.instances < count:
        ideal = random_squarefree_ideal(rng, n)
        if ideal is None:
            continue
        result.instances += 1
        complex_ = stanley_reisner_complex(ideal)
        dual = alexander_dual(ideal)
        decomposable = is_vertex_decomposable(complex_, caps)
        splittable = is_vertex_splittable(dual, SplitReading.LITERAL, caps)
        shellable = is_shellable(complex_, caps)
        quotients = find_lq_order(dual, caps)
        _check_certificate(result, ideal, decomposable, complex_, "decomposition")
        _check_certificate(result, ideal, shellable, complex_, "shelling")
        _check_certificate(result, dual, splittable, dual, "split")
        _check_certificate(result, dual, quotients, dual, "order")
        if decomposable.decided and splittable.decided and decomposable.holds != splittable.holds:
            result.fail(ideal, "vertex decomposable differs from dual vertex splittable")
        if shellable.decided and quotients.decided and shellable.holds != quotients.holds:
            result.fail(ideal, "shellable differs from dual linear quotients")

        if n <= 5:
            _confirm(result, ideal, decomposable,
                     lambda: reference.vertex_decomposable(complex_), "decomposability")
            _confirm(result, dual, splittable,
                     lambda: reference.splittable(dual), "splitting")
            if len(complex_.facets) <= limit:
                _confirm(result, ideal, shellable,
                         lambda: reference.shelling_exists(complex_), "shelling")
            if len(dual.gens) <= limit:
                _confirm(result, dual, quotients,
                         lambda: reference.lq_order_exists(dual), "linear quotients")
            wpm = find_wpm_order(dual, caps)
            _check_certificate(result, dual, wpm, dual, "variable order")
            _confirm(result, dual, wpm, lambda: reference.wpm_order_exists(dual), "variable order")
        result.counts["shellable" if shellable.holds else "not_shellable"] += 1
        _homology_checks(result, ideal, field_, caps)


def run_suite(
    suite: Suite,
    n: int,
    caps: Caps = DEFAULT_CAPS,
    field_: FieldSpec = RATIONALS,
    squares: bool = False,
    count: int = 500,
    seed: int = 0,
    max_gens: int = 3,
) -> SuiteResult:
    """Run one suite at size n; raises ResourceCapError above the suite's limit."""
    suite = Suite(suite)
    if n > SUITE_LIMITS[suite.value]:
        raise ResourceCapError(f"{suite.value} suite size", SUITE_LIMITS[suite.value], n)
    if n < 1:
        raise ValueError("Suites need at least one variable")
    result = SuiteResult(suite.value, n)
    LOGGER.info(f"Running the {suite.value} suite at n={n}")
    if suite == Suite.MATROIDAL:
        _run_matroidal(n, caps, field_, result)
    elif suite == Suite.FEW_GENERATORS:
        _run_decomposable_family(few_generator_ideals(n, max_gens), caps, result)
    elif suite == Suite.COVERING_SUPPORTS:
        _run_decomposable_family(covering_support_ideals(n), caps, result)
    elif suite == Suite.QUADRATIC:
        _run_quadratic(n, caps, field_, squares, result)
    else:
        _run_duality(n, caps, field_, count, seed, result)
    return result
