"""Witnesses returned by the decision procedures and the Decision wrapper around them."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional, Union

from monodec.core.monomial import Monomial, VariableSet, VarSubset
from monodec.errors import Verdict

# A variable order (indices), a generator order (monomials) or a facet order (subsets).
OrderItem = Union[int, Monomial, VarSubset]


class CertificateKind(Enum):
    """What a certificate witnesses."""

    SPLIT_TREE = "split-tree"
    DECOMPOSITION_TREE = "decomposition-tree"
    SHELLING_ORDER = "shelling-order"
    LQ_ORDER = "lq-order"
    WPM_ORDER = "wpm-order"
    REFUTATION = "refutation-note"


@dataclass(frozen=True)
class Certificate:
    """A recursive witness.

    Split trees store the splitting variable and the certificates of (I_1, I_2); a
    node without a vertex is a base case. Decomposition trees store the shedding
    vertex and the certificates of (link, deletion). Order certificates store the
    order itself, position 0 first.
    """

    kind: CertificateKind
    vertex: Optional[int] = None
    order: tuple[OrderItem, ...] = ()
    children: tuple["Certificate", ...] = ()
    note: str = ""
    relaxed: bool = False

    @classmethod
    def leaf(cls, kind: CertificateKind, note: str, relaxed: bool = False) -> "Certificate":
        return cls(kind, note=note, relaxed=relaxed)

    @classmethod
    def refutation(cls, note: str) -> "Certificate":
        return cls(CertificateKind.REFUTATION, note=note)

    @property
    def is_leaf(self) -> bool:
        return self.vertex is None and not self.children

    def node_count(self) -> int:
        count = 0
        stack = [self]
        while stack:
            node = stack.pop()
            count += 1
            stack.extend(node.children)
        return count

    def _format_item(self, item: OrderItem, variables: VariableSet) -> str:
        if isinstance(item, Monomial):
            return item.format(variables)
        if isinstance(item, frozenset):
            return variables.format_subset(item)
        return variables.label(item)

    def format_order(self, variables: VariableSet) -> str:
        sep = " > " if self.kind == CertificateKind.WPM_ORDER else ", "
        return sep.join(self._format_item(item, variables) for item in self.order)

    def to_dict(self, variables: VariableSet) -> dict[str, Any]:
        data: dict[str, Any] = {"kind": self.kind.value}
        if self.vertex is not None:
            data["vertex"] = variables.label(self.vertex)
        if self.order:
            data["order"] = [self._format_item(item, variables) for item in self.order]
        if self.children:
            data["children"] = [child.to_dict(variables) for child in self.children]
        if self.note:
            data["note"] = self.note
        if self.relaxed:
            data["relaxed"] = True
        return data

    def summary(self, variables: VariableSet) -> str:
        """One line for reports: the root of a tree or the whole order."""
        if self.kind == CertificateKind.REFUTATION:
            return f"refutation: {self.note}"
        if self.kind in (CertificateKind.SPLIT_TREE, CertificateKind.DECOMPOSITION_TREE):
            if self.vertex is None:
                return f"{self.kind.value}: {self.note}"
            return (
                f"{self.kind.value}: root {variables.label(self.vertex)}, "
                f"{self.node_count()} nodes"
            )
        return f"{self.kind.value}: {self.format_order(variables)}"


@dataclass(frozen=True)
class Decision:
    """Verdict of a decision procedure together with its witness.

    `examined` counts search nodes; `orders_covered` is only used by the
    variable-order search and counts the complete orders accounted for.
    """

    verdict: Verdict
    certificate: Optional[Certificate] = None
    examined: int = 0
    orders_covered: int = 0
    note: str = ""

    @classmethod
    def undecided(cls, note: str, examined: int = 0) -> "Decision":
        return cls(Verdict.UNDECIDED, examined=examined, note=note)

    @property
    def holds(self) -> bool:
        return self.verdict == Verdict.TRUE

    @property
    def refuted(self) -> bool:
        return self.verdict == Verdict.FALSE

    @property
    def decided(self) -> bool:
        return self.verdict != Verdict.UNDECIDED

    def to_dict(self, variables: VariableSet) -> dict[str, Any]:
        data: dict[str, Any] = {"value": self.verdict.value, "examined": self.examined}
        if self.orders_covered:
            data["orders_covered"] = self.orders_covered
        if self.certificate is not None:
            data["certificate"] = self.certificate.to_dict(variables)
        if self.note:
            data["note"] = self.note
        return data
