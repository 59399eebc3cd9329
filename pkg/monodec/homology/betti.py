"""Graded Betti numbers through Hochster's formula, and the predicates built on them.

beta_{i,j}(I) is the sum, over vertex sets W of size j, of the reduced homology of the
induced subcomplex Delta_W in degree j - i - 2. Only sets W that are unions of
generator supports can contribute; every other Delta_W is a cone.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any, Iterable

from sympy import Poly, Symbol

from monodec.config import DEFAULT_CAPS, Caps
from monodec.core.complex import induced_subcomplex, stanley_reisner_complex
from monodec.core.field import RATIONALS, FieldSpec
from monodec.core.ideal import (
    MonomialIdeal,
    polarize,
    require_proper_nonzero,
    require_squarefree,
    squarefree_component,
)
from monodec.core.monomial import Monomial
from monodec.errors import ResourceCapError
from monodec.homology.simplicial import reduced_homology_dims

LOGGER = logging.getLogger(__name__)

T = Symbol("t")


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j} of an ideal; only nonzero entries are stored."""

    ideal: MonomialIdeal
    field: FieldSpec
    entries: dict[tuple[int, int], int]

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    @property
    def regularity(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def quotient_entries(self) -> dict[tuple[int, int], int]:
        """Betti numbers of R/I: beta_{0,0} = 1 and beta_{i+1,j}(R/I) = beta_{i,j}(I)."""
        shifted = {(i + 1, j): b for (i, j), b in self.entries.items()}
        shifted[(0, 0)] = 1
        return shifted

    def rows(self) -> list[tuple[int, list[int]]]:
        """Rows indexed by j - i, columns by i, as in the usual Betti diagram."""
        width = self.projective_dimension + 1
        low = min(j - i for i, j in self.entries)
        return [
            (r, [self.get(i, i + r) for i in range(width)])
            for r in range(low, self.regularity + 1)
        ]

    def to_dict(self) -> dict[str, Any]:
        return {
            "ideal": self.ideal.format(),
            "field": str(self.field),
            "entries": {f"{i},{j}": b for (i, j), b in sorted(self.entries.items())},
            "regularity": self.regularity,
            "projective_dimension": self.projective_dimension,
        }


def _support_unions(gen_masks: Iterable[int]) -> set[int]:
    unions = {0}
    for g in gen_masks:
        unions |= {u | g for u in unions}
    unions.discard(0)
    return unions


def betti_table(
    ideal: MonomialIdeal, field: FieldSpec = RATIONALS, caps: Caps = DEFAULT_CAPS
) -> BettiTable:
    """Graded Betti numbers of I; non-squarefree ideals go through their polarization."""
    require_proper_nonzero(ideal, "betti_table")
    squarefree = polarize(ideal)
    if squarefree.n > caps.max_vertices:
        raise ResourceCapError("max_vertices", caps.max_vertices, squarefree.n)

    complex_ = stanley_reisner_complex(squarefree)
    unions = _support_unions(g.mask for g in squarefree.gens)
    LOGGER.debug(f"Hochster sum for {ideal} over {len(unions)} vertex sets")

    entries: Counter = Counter()
    for w in unions:
        j = w.bit_count()
        profile = reduced_homology_dims(induced_subcomplex(complex_, w), field, caps)
        for degree, dim in profile.nonzero().items():
            entries[(j - degree - 2, j)] += dim
    return BettiTable(ideal, field, dict(sorted(entries.items())))


def regularity(
    ideal: MonomialIdeal, field: FieldSpec = RATIONALS, caps: Caps = DEFAULT_CAPS
) -> int:
    """Castelnuovo-Mumford regularity: max j - i over nonzero beta_{i,j}."""
    return betti_table(ideal, field, caps).regularity


def has_linear_resolution(
    ideal: MonomialIdeal, field: FieldSpec = RATIONALS, caps: Caps = DEFAULT_CAPS
) -> bool:
    """Generated in one degree d with regularity d; mixed degrees never qualify."""
    require_proper_nonzero(ideal, "has_linear_resolution")
    if not ideal.is_single_degree:
        return False
    return regularity(ideal, field, caps) == ideal.degrees[0]


def is_componentwise_linear(
    ideal: MonomialIdeal, field: FieldSpec = RATIONALS, caps: Caps = DEFAULT_CAPS
) -> bool:
    """Every nonzero squarefree component I_[j] has a linear resolution."""
    require_squarefree(ideal, "is_componentwise_linear")
    if not ideal.is_proper_nonzero:
        return True
    for j in range(ideal.degrees[0], ideal.n + 1):
        component = squarefree_component(ideal, j)
        if component.is_zero:
            continue
        if not has_linear_resolution(component, field, caps):
            LOGGER.debug(f"Component I_[{j}] of {ideal} has no linear resolution")
            return False
    return True


def hilbert_numerator(ideal: MonomialIdeal, caps: Caps = DEFAULT_CAPS) -> Poly:
    """Inclusion-exclusion numerator: sum over generator subsets S of (-1)^|S| t^deg lcm(S).

    Subsets with equal lcm are merged as they are formed.
    """
    require_proper_nonzero(ideal, "hilbert_numerator")
    if len(ideal.gens) > caps.max_hilbert_generators:
        raise ResourceCapError(
            "max_hilbert_generators", caps.max_hilbert_generators, len(ideal.gens)
        )

    terms: dict[Monomial, int] = {Monomial.one(ideal.n): 1}
    for g in ideal.gens:
        updated = dict(terms)
        for m, coeff in terms.items():
            key = m.lcm(g)
            updated[key] = updated.get(key, 0) - coeff
        terms = {m: c for m, c in updated.items() if c}

    by_degree: Counter = Counter()
    for m, coeff in terms.items():
        by_degree[m.degree] += coeff
    return Poly.from_dict({(d,): c for d, c in by_degree.items() if c} or {(0,): 0}, T)


def euler_mismatches(table: BettiTable, numerator: Poly) -> list[int]:
    """Degrees j where sum_i (-1)^i beta_{i,j}(R/I) differs from the t^j coefficient."""
    alternating: Counter = Counter()
    for (i, j), b in table.quotient_entries().items():
        alternating[j] += (-1) ** i * b
    expected = {d: int(c) for (d,), c in numerator.as_dict().items()}
    degrees = set(alternating) | set(expected)
    return sorted(j for j in degrees if alternating.get(j, 0) != expected.get(j, 0))


def generator_degree_mismatches(table: BettiTable) -> list[int]:
    """Degrees d where beta_{0,d} differs from the number of degree-d minimal generators."""
    counts = Counter(g.degree for g in table.ideal.gens)
    row = {j: b for (i, j), b in table.entries.items() if i == 0}
    degrees = set(counts) | set(row)
    return sorted(d for d in degrees if counts.get(d, 0) != row.get(d, 0))


def field_discrepancies(
    ideal: MonomialIdeal, fields: Iterable[FieldSpec], caps: Caps = DEFAULT_CAPS
) -> list[str]:
    """Betti entries that differ between the first field and each of the others."""
    fields = list(fields)
    if not fields:
        return []
    base = betti_table(ideal, fields[0], caps)
    notes = []
    for other_field in fields[1:]:
        other = betti_table(ideal, other_field, caps)
        for key in sorted(set(base.entries) | set(other.entries)):
            if base.entries.get(key, 0) != other.entries.get(key, 0):
                notes.append(
                    f"beta_{key[0]},{key[1]}: {base.entries.get(key, 0)} over {fields[0]}, "
                    f"{other.entries.get(key, 0)} over {other_field}"
                )
    if notes:
        LOGGER.warning(f"Betti numbers of {ideal} depend on the field: {len(notes)} entries")
    return notes
