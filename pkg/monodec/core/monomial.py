"""Variables, monomials and variable subsets.

Variable indices are 0-based internally; the standard labels are x1..xn.
A squarefree monomial doubles as the vertex subset it is supported on.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from monodec.errors import VariableMismatchError

# A subset of variable indices: faces, supports, minimal primes.
VarSubset = frozenset[int]


def subset_to_mask(subset: Iterable[int]) -> int:
    mask = 0
    for idx in subset:
        mask |= 1 << idx
    return mask


def mask_to_subset(mask: int) -> VarSubset:
    members = []
    idx = 0
    while mask:
        if mask & 1:
            members.append(idx)
        mask >>= 1
        idx += 1
    return frozenset(members)


def subset_sort_key(subset: VarSubset) -> tuple[int, tuple[int, ...]]:
    """Canonical order of subsets: by size, then member-lexicographic."""
    return len(subset), tuple(sorted(subset))


@dataclass(frozen=True)
class VariableSet:
    """Ordered, labelled variables of a polynomial ring."""

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.names) < 1:
            raise ValueError("A variable set needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"Variable labels must be distinct: {self.names}")

    @classmethod
    def standard(cls, n: int) -> "VariableSet":
        """Variables x1..xn."""
        return cls(tuple(f"x{i}" for i in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.names)

    def label(self, idx: int) -> str:
        return self.names[idx]

    def extend(self, extra: Iterable[str]) -> "VariableSet":
        return VariableSet(self.names + tuple(extra))

    def format_subset(self, subset: Iterable[int]) -> str:
        return "{" + ",".join(self.names[i] for i in sorted(subset)) + "}"

    def format_order(self, order: Iterable[int]) -> str:
        return ">".join(self.names[i] for i in order)


@dataclass(frozen=True)
class Monomial:
    """A monomial x1^a1 ... xn^an given by its exponent vector."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < 0 for a in self.exponents):
            raise ValueError(f"Exponents must be non-negative: {self.exponents}")

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, n: int, idx: int) -> "Monomial":
        exps = [0] * n
        exps[idx] = 1
        return cls(tuple(exps))

    @classmethod
    def from_subset(cls, n: int, subset: Iterable[int]) -> "Monomial":
        """The squarefree monomial x_F of a subset F."""
        exps = [0] * n
        for idx in subset:
            exps[idx] = 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @cached_property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(a <= 1 for a in self.exponents)

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    @cached_property
    def support(self) -> VarSubset:
        return frozenset(i for i, a in enumerate(self.exponents) if a > 0)

    @cached_property
    def mask(self) -> int:
        return subset_to_mask(self.support)

    @property
    def sort_key(self) -> tuple:
        """Degree first, then exponent vectors in decreasing lexicographic order."""
        return self.degree, tuple(-a for a in self.exponents)

    def _check(self, other: "Monomial") -> None:
        if len(other.exponents) != len(self.exponents):
            raise VariableMismatchError(
                f"Monomials over {len(self.exponents)} and {len(other.exponents)} variables"
            )

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact division; `other` must divide `self`."""
        if not other.divides(self):
            raise ValueError("Monomial division is not exact")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def quotient(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other): the generator of (self) : other."""
        self._check(other)
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def times_variable(self, idx: int) -> "Monomial":
        exps = list(self.exponents)
        exps[idx] += 1
        return Monomial(tuple(exps))

    def over_variable(self, idx: int) -> "Monomial":
        if self.exponents[idx] == 0:
            raise ValueError(f"Variable {idx} does not divide the monomial")
        exps = list(self.exponents)
        exps[idx] -= 1
        return Monomial(tuple(exps))

    def permuted(self, order: tuple[int, ...]) -> tuple[int, ...]:
        """Exponent vector read along a variable order (position 0 first)."""
        return tuple(self.exponents[i] for i in order)

    def format(self, variables: VariableSet) -> str:
        if self.is_one:
            return "1"
        factors = []
        for idx, a in enumerate(self.exponents):
            if a == 1:
                factors.append(variables.label(idx))
            elif a > 1:
                factors.append(f"{variables.label(idx)}^{a}")
        return "*".join(factors)


def support(m: Monomial) -> VarSubset:
    """Indices of the variables with positive exponent."""
    return m.support
