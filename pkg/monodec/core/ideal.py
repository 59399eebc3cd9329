"""Monomial ideals in canonical minimal form and the operations on them."""

import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

from monodec.core.monomial import Monomial, VariableSet
from monodec.errors import DegenerateIdealError, NotSquarefreeError, VariableMismatchError

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generating set G(I).

    Generators are sorted by degree, then by decreasing exponent vector, so equal
    ideals have equal representations. The zero ideal has no generators; the unit
    ideal is generated by the monomial 1.
    """

    variables: VariableSet
    gens: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        for g in self.gens:
            if g.n != self.variables.n:
                raise VariableMismatchError(
                    f"Generator over {g.n} variables in an ideal over {self.variables.n}"
                )

    @classmethod
    def zero(cls, variables: VariableSet) -> "MonomialIdeal":
        return cls(variables, ())

    @classmethod
    def unit(cls, variables: VariableSet) -> "MonomialIdeal":
        return cls(variables, (Monomial.one(variables.n),))

    @classmethod
    def from_subsets(
        cls, variables: VariableSet, subsets: Iterable[Iterable[int]]
    ) -> "MonomialIdeal":
        """Squarefree ideal generated by the monomials x_F of the given subsets."""
        return minimalize([Monomial.from_subset(variables.n, s) for s in subsets], variables)

    @property
    def n(self) -> int:
        return self.variables.n

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    @property
    def is_proper_nonzero(self) -> bool:
        return not self.is_zero and not self.is_unit

    @property
    def is_principal(self) -> bool:
        return len(self.gens) == 1

    @cached_property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({g.degree for g in self.gens}))

    @property
    def is_single_degree(self) -> bool:
        return len(self.degrees) == 1

    @cached_property
    def used_variables(self) -> frozenset[int]:
        used: set[int] = set()
        for g in self.gens:
            used |= g.support
        return frozenset(used)

    def contains(self, m: Monomial) -> bool:
        """Ideal membership of a monomial: some generator divides it."""
        return any(g.divides(m) for g in self.gens)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def format(self) -> str:
        if self.is_zero:
            return "0"
        return ", ".join(g.format(self.variables) for g in self.gens)

    def __str__(self) -> str:
        return f"({self.format()})" if not self.is_zero else "(0)"


def minimalize(
    gens: Iterable[Monomial], variables: Optional[VariableSet] = None
) -> MonomialIdeal:
    """Reduce a generating set to the canonically sorted minimal generating set."""
    unique = sorted(set(gens), key=lambda m: m.sort_key)
    if variables is None:
        if not unique:
            raise ValueError("Cannot infer the variable set of an empty generating set")
        variables = VariableSet.standard(unique[0].n)
    for m in unique:
        if m.n != variables.n:
            raise VariableMismatchError(
                f"Monomial over {m.n} variables given for a ring in {variables.n} variables"
            )

    kept: list[Monomial] = []
    for m in unique:
        # divisors of m have smaller degree, so they are already kept
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return MonomialIdeal(variables, tuple(kept))


def colon_by_monomial(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The colon ideal (I : m), generated by u / gcd(u, m) for u in G(I)."""
    if m.n != ideal.n:
        raise VariableMismatchError(f"Monomial over {m.n} variables, ideal over {ideal.n}")
    return minimalize((u.quotient(m) for u in ideal.gens), ideal.variables)


def _fresh_name(label: str, copy: int) -> str:
    stem = "y" + label[1:] if label.startswith("x") and label[1:].isdigit() else label + "'"
    return stem if copy == 1 else f"{stem}_{copy}"


def polarize(ideal: MonomialIdeal) -> MonomialIdeal:
    """Standard polarization: x_i^k becomes x_i times k-1 fresh variables.

    Fresh variables are appended after the originals, ordered by the variable they
    polarize and then by copy number; a squarefree ideal comes back unchanged.
    """
    if ideal.is_squarefree:
        return ideal

    max_exp = [max((g.exponents[i] for g in ideal.gens), default=0) for i in range(ideal.n)]
    fresh_names: list[str] = []
    fresh_index: dict[tuple[int, int], int] = {}
    for i, k in enumerate(max_exp):
        for copy in range(1, k):
            fresh_index[(i, copy)] = ideal.n + len(fresh_names)
            fresh_names.append(_fresh_name(ideal.variables.label(i), copy))
    variables = ideal.variables.extend(fresh_names)

    polarized = []
    for g in ideal.gens:
        exps = [0] * variables.n
        for i, a in enumerate(g.exponents):
            if a == 0:
                continue
            exps[i] = 1
            for copy in range(1, a):
                exps[fresh_index[(i, copy)]] = 1
        polarized.append(Monomial(tuple(exps)))

    LOGGER.debug(f"Polarized {ideal} into {len(fresh_names)} fresh variables")
    return minimalize(polarized, variables)


def require_squarefree(ideal: MonomialIdeal, operation: str) -> None:
    if not ideal.is_squarefree:
        raise NotSquarefreeError(f"{operation} needs a squarefree ideal, got {ideal}")


def require_proper_nonzero(ideal: MonomialIdeal, operation: str) -> None:
    if not ideal.is_proper_nonzero:
        raise DegenerateIdealError(f"{operation} needs a proper nonzero ideal, got {ideal}")


def squarefree_component(ideal: MonomialIdeal, degree: int) -> MonomialIdeal:
    """I_[j]: the ideal generated by the squarefree monomials of degree j lying in I."""
    require_squarefree(ideal, "squarefree_component")
    if degree < 0 or degree > ideal.n:
        return MonomialIdeal.zero(ideal.variables)
    gens = []
    for subset in combinations(range(ideal.n), degree):
        m = Monomial.from_subset(ideal.n, subset)
        if ideal.contains(m):
            gens.append(m)
    return minimalize(gens, ideal.variables)


def deg_ideal(ideal: MonomialIdeal) -> int:
    """deg(I): the maximum degree of a minimal generator."""
    if ideal.is_zero:
        raise DegenerateIdealError("The zero ideal has no generator degree")
    return max(g.degree for g in ideal.gens)
