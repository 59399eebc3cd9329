"""Replaying certificates against their definitions, without any search."""

import logging
from typing import Union

from monodec.classify.certificates import Certificate, CertificateKind
from monodec.classify.decomposition import is_shedding_vertex, is_shelling_order
from monodec.classify.exchange import is_weakly_polymatroidal_under
from monodec.classify.quotients import has_linear_quotients_under
from monodec.classify.splitting import SplitReading, base_case, split_at
from monodec.core.complex import SimplicialComplex, deletion, link
from monodec.core.ideal import MonomialIdeal
from monodec.core.monomial import Monomial
from monodec.errors import CertificateError, OrderError

LOGGER = logging.getLogger(__name__)

Subject = Union[MonomialIdeal, SimplicialComplex]

IDEAL_KINDS = {CertificateKind.SPLIT_TREE, CertificateKind.LQ_ORDER, CertificateKind.WPM_ORDER}
COMPLEX_KINDS = {CertificateKind.DECOMPOSITION_TREE, CertificateKind.SHELLING_ORDER}


def _check_kind(cert: Certificate, subject: Subject) -> None:
    if cert.kind == CertificateKind.REFUTATION:
        raise CertificateError(
            "A refutation has no witness to replay; confirm it with an exhaustive search"
        )
    kinds = IDEAL_KINDS if isinstance(subject, MonomialIdeal) else COMPLEX_KINDS
    if cert.kind not in kinds:
        raise CertificateError(f"A {cert.kind.value} certificate does not apply to {subject}")


def _check_children(node: Certificate) -> None:
    if node.vertex is None and node.children:
        raise CertificateError("A base-case node cannot have children")
    if node.vertex is not None and len(node.children) != 2:
        raise CertificateError(f"A branching node needs two children, got {len(node.children)}")


def _verify_split_tree(cert: Certificate, ideal: MonomialIdeal) -> bool:
    stack = [(ideal, cert)]
    while stack:
        current, node = stack.pop()
        _check_children(node)
        if node.vertex is None:
            if base_case(current) is None:
                LOGGER.debug(f"Split leaf at {current}, which is no base case")
                return False
            continue
        if not 0 <= node.vertex < current.n:
            raise CertificateError(f"Splitting variable {node.vertex} out of range")
        reading = SplitReading.RELAXED if node.relaxed else SplitReading.LITERAL
        split = split_at(current, node.vertex, reading)
        if split is None:
            LOGGER.debug(f"{current} does not split at {current.variables.label(node.vertex)}")
            return False
        stack.append((split.inner, node.children[0]))
        stack.append((split.outer, node.children[1]))
    return True


def _verify_decomposition_tree(cert: Certificate, complex_: SimplicialComplex) -> bool:
    stack = [(complex_, cert)]
    while stack:
        current, node = stack.pop()
        _check_children(node)
        if node.vertex is None:
            if not current.is_simplex:
                LOGGER.debug(f"Decomposition leaf at {current}, which is no simplex")
                return False
            continue
        if node.vertex not in current.vertices or not is_shedding_vertex(current, node.vertex):
            return False
        stack.append((link(current, [node.vertex]), node.children[0]))
        stack.append((deletion(current, [node.vertex]), node.children[1]))
    return True


def verify_certificate(cert: Certificate, subject: Subject) -> bool:
    """True iff every node of the witness satisfies its defining condition.

    Raises CertificateError for refutations, kind mismatches and malformed witnesses.
    """
    _check_kind(cert, subject)
    try:
        if cert.kind == CertificateKind.SPLIT_TREE:
            return _verify_split_tree(cert, subject)
        if cert.kind == CertificateKind.DECOMPOSITION_TREE:
            return _verify_decomposition_tree(cert, subject)
        if cert.kind == CertificateKind.LQ_ORDER:
            if not all(isinstance(u, Monomial) for u in cert.order):
                raise CertificateError("A linear-quotients order lists generators")
            return has_linear_quotients_under(subject, cert.order)
        if cert.kind == CertificateKind.WPM_ORDER:
            if not all(isinstance(v, int) for v in cert.order):
                raise CertificateError("A variable order lists variable indices")
            return is_weakly_polymatroidal_under(subject, cert.order)
        if not all(isinstance(f, frozenset) for f in cert.order):
            raise CertificateError("A shelling order lists facets")
        return is_shelling_order(subject, cert.order)
    except OrderError as e:
        raise CertificateError(str(e)) from e


def describe_certificate(cert: Certificate, subject: Subject) -> str:
    """Report line; for split trees the root split is written out."""
    if (
        cert.kind == CertificateKind.SPLIT_TREE
        and cert.vertex is not None
        and isinstance(subject, MonomialIdeal)
    ):
        reading = SplitReading.RELAXED if cert.relaxed else SplitReading.LITERAL
        split = split_at(subject, cert.vertex, reading)
        if split is not None:
            return f"split-tree: I = {split.format(subject)}, {cert.node_count()} nodes"
    return cert.summary(subject.variables)
