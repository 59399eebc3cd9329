"""Simplicial complexes and the Stanley-Reisner correspondence.

Faces are handled as bitmasks inside this module; the public surface speaks VarSubset.
Conventions: the zero ideal corresponds to the full simplex, the unit ideal to the
void complex (no faces at all), and the maximal ideal (x1,...,xn) to the irrelevant
complex whose only face is the empty set.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional

from monodec.core.ideal import MonomialIdeal, minimalize, require_squarefree
from monodec.core.monomial import (
    Monomial,
    VariableSet,
    VarSubset,
    mask_to_subset,
    subset_sort_key,
    subset_to_mask,
)
from monodec.errors import DegenerateIdealError

LOGGER = logging.getLogger(__name__)


def maximal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of a family of bitmasks."""
    kept: list[int] = []
    for mask in sorted(set(masks), key=lambda m: -m.bit_count()):
        if not any(mask & k == mask for k in kept):
            kept.append(mask)
    return kept


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal members of a family of bitmasks."""
    kept: list[int] = []
    for mask in sorted(set(masks), key=lambda m: m.bit_count()):
        if not any(k & mask == k for k in kept):
            kept.append(mask)
    return kept


def submasks(mask: int) -> Iterator[int]:
    """All submasks of `mask`, the empty mask included."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def mask_bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on the given variables, stored by its facets.

    The facet list is kept free of nested pairs and sorted by size, then by members.
    No facets at all is the void complex; the single facet {} is the irrelevant complex.
    """

    variables: VariableSet
    facets: tuple[VarSubset, ...]

    def __post_init__(self) -> None:
        facets = tuple(sorted({frozenset(f) for f in self.facets}, key=subset_sort_key))
        for f in facets:
            if any(i < 0 or i >= self.variables.n for i in f):
                raise ValueError(f"Face {sorted(f)} leaves the vertex set of size {self.n}")
        for a in facets:
            for b in facets:
                if a != b and a <= b:
                    raise ValueError(f"Facet {sorted(a)} is contained in facet {sorted(b)}")
        object.__setattr__(self, "facets", facets)

    @classmethod
    def from_faces(
        cls, variables: VariableSet, faces: Iterable[Iterable[int]]
    ) -> "SimplicialComplex":
        """The complex generated by the given faces (non-maximal ones are dropped)."""
        return cls.from_masks(variables, (subset_to_mask(f) for f in faces))

    @classmethod
    def from_masks(cls, variables: VariableSet, masks: Iterable[int]) -> "SimplicialComplex":
        return cls(variables, tuple(mask_to_subset(m) for m in maximal_masks(masks)))

    @classmethod
    def void(cls, variables: VariableSet) -> "SimplicialComplex":
        return cls(variables, ())

    @classmethod
    def irrelevant(cls, variables: VariableSet) -> "SimplicialComplex":
        return cls(variables, (frozenset(),))

    @classmethod
    def simplex(
        cls, variables: VariableSet, vertices: Optional[Iterable[int]] = None
    ) -> "SimplicialComplex":
        members = frozenset(range(variables.n) if vertices is None else vertices)
        return cls(variables, (members,))

    @property
    def n(self) -> int:
        return self.variables.n

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (frozenset(),)

    @property
    def is_simplex(self) -> bool:
        """At most one facet: the base case of vertex decomposability."""
        return len(self.facets) <= 1

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(subset_to_mask(f) for f in self.facets)

    @cached_property
    def vertices(self) -> VarSubset:
        return frozenset().union(*self.facets) if self.facets else frozenset()

    @property
    def dimension(self) -> Optional[int]:
        """Largest facet dimension; None for the void complex."""
        if self.is_void:
            return None
        return max(len(f) for f in self.facets) - 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def contains_face(self, face: Iterable[int]) -> bool:
        return self.contains_mask(subset_to_mask(face))

    def contains_mask(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.masks)

    def face_masks(self) -> set[int]:
        """Every face as a bitmask; empty for the void complex."""
        faces: set[int] = set()
        for f in self.masks:
            faces.update(submasks(f))
        return faces

    def format(self) -> str:
        return "<" + ", ".join(self.variables.format_subset(f) for f in self.facets) + ">"

    def __str__(self) -> str:
        return self.format()


def link(complex_: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """lk(F) = {A in complex : A and F disjoint, A union F in complex}."""
    f = subset_to_mask(face)
    return SimplicialComplex.from_masks(
        complex_.variables, (g & ~f for g in complex_.masks if g & f == f)
    )


def deletion(complex_: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """del(F) = {A in complex : A and F disjoint}."""
    f = subset_to_mask(face)
    return SimplicialComplex.from_masks(complex_.variables, (g & ~f for g in complex_.masks))


def induced_subcomplex(complex_: SimplicialComplex, vertices: int) -> SimplicialComplex:
    """The restriction to a vertex subset given as a bitmask."""
    return SimplicialComplex.from_masks(complex_.variables, (g & vertices for g in complex_.masks))


def _generator_masks(ideal: MonomialIdeal) -> list[int]:
    return [g.mask for g in ideal.gens]


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces are the subsets supporting no generator of I."""
    require_squarefree(ideal, "stanley_reisner_complex")
    gens = _generator_masks(ideal)
    if ideal.is_unit:
        return SimplicialComplex.void(ideal.variables)

    faces = [0]
    frontier = [0]
    while frontier:
        grown = []
        for mask in frontier:
            for v in range(mask.bit_length(), ideal.n):
                candidate = mask | (1 << v)
                if not any(g & candidate == g for g in gens):
                    grown.append(candidate)
        faces.extend(grown)
        frontier = grown
    return SimplicialComplex.from_masks(ideal.variables, faces)


def stanley_reisner_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    """I_Delta: generated by x_N for the minimal non-faces N."""
    if complex_.is_void:
        return MonomialIdeal.unit(complex_.variables)
    faces = complex_.face_masks()
    nonfaces: set[int] = set()
    for face in faces:
        for v in range(complex_.n):
            bit = 1 << v
            if face & bit:
                continue
            candidate = face | bit
            if candidate in faces:
                continue
            if all((candidate & ~(1 << u)) in faces for u in mask_bits(candidate)):
                nonfaces.add(candidate)
    return minimalize(
        (Monomial.from_subset(complex_.n, mask_to_subset(m)) for m in nonfaces),
        complex_.variables,
    )


def minimal_primes(ideal: MonomialIdeal) -> list[VarSubset]:
    """Minimal vertex covers of the generator supports, canonically sorted.

    These are the generator sets of the minimal primes of a squarefree ideal.
    """
    require_squarefree(ideal, "minimal_primes")
    if not ideal.is_proper_nonzero:
        raise DegenerateIdealError(f"minimal_primes needs a proper nonzero ideal, got {ideal}")

    transversals = [0]
    for g in sorted(_generator_masks(ideal), key=lambda m: m.bit_count()):
        grown: set[int] = set()
        for t in transversals:
            if t & g:
                grown.add(t)
            else:
                grown.update(t | (1 << v) for v in mask_bits(g))
        transversals = minimal_masks(grown)
    return sorted((mask_to_subset(t) for t in transversals), key=subset_sort_key)


def alexander_dual(ideal: MonomialIdeal) -> MonomialIdeal:
    """I^vee, generated by x_P for the minimal primes P of I."""
    require_squarefree(ideal, "alexander_dual")
    if ideal.is_zero:
        return MonomialIdeal.unit(ideal.variables)
    if ideal.is_unit:
        return MonomialIdeal.zero(ideal.variables)
    return minimalize(
        (Monomial.from_subset(ideal.n, p) for p in minimal_primes(ideal)), ideal.variables
    )


def dual_from_facets(ideal: MonomialIdeal) -> MonomialIdeal:
    """I^vee computed through the facets: generated by x_{V minus F}."""
    complex_ = stanley_reisner_complex(ideal)
    full = (1 << ideal.n) - 1
    if complex_.is_void:
        return MonomialIdeal.zero(ideal.variables)
    return minimalize(
        (Monomial.from_subset(ideal.n, mask_to_subset(full & ~f)) for f in complex_.masks),
        ideal.variables,
    )


def dual_complex(complex_: SimplicialComplex) -> SimplicialComplex:
    """The Alexander dual complex {V minus A : A not a face}."""
    return stanley_reisner_complex(alexander_dual(stanley_reisner_ideal(complex_)))
