"""Certified decision procedures for monomial ideals and simplicial complexes."""

from .certificates import Certificate, CertificateKind, Decision
from .chordal import is_chordal_complement_oracle
from .decomposition import is_shedding_vertex, is_shellable, is_vertex_decomposable
from .duality import (
    dual_of_complex,
    is_cohen_macaulay,
    is_sequentially_cm,
    lq_to_shelling_order,
    shelling_to_lq_order,
)
from .exchange import (
    find_wpm_order,
    is_matroidal,
    is_polymatroidal,
    is_weakly_polymatroidal_under,
    pair_violates,
    wpm_violation,
)
from .quotients import find_lq_order, has_linear_quotients_under
from .splitting import SplitReading, is_vertex_splittable
from .verify import describe_certificate, verify_certificate

__all__ = [
    "Certificate",
    "CertificateKind",
    "Decision",
    "SplitReading",
    "describe_certificate",
    "dual_of_complex",
    "find_lq_order",
    "find_wpm_order",
    "has_linear_quotients_under",
    "is_chordal_complement_oracle",
    "is_cohen_macaulay",
    "is_matroidal",
    "is_polymatroidal",
    "is_sequentially_cm",
    "is_shedding_vertex",
    "is_shellable",
    "is_vertex_decomposable",
    "is_vertex_splittable",
    "is_weakly_polymatroidal_under",
    "lq_to_shelling_order",
    "pair_violates",
    "shelling_to_lq_order",
    "verify_certificate",
    "wpm_violation",
]
