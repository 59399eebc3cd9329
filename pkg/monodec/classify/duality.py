"""Properties of Delta read off the Alexander dual of its Stanley-Reisner ideal.

Cohen-Macaulayness is taken as "the dual has a linear resolution" and sequential
Cohen-Macaulayness as "the dual is componentwise linear". Shelling orders of Delta
and linear-quotients orders of the dual correspond through facet complements.
"""

import logging
from typing import Sequence

from monodec.config import DEFAULT_CAPS, Caps
from monodec.core.complex import SimplicialComplex, alexander_dual, stanley_reisner_ideal
from monodec.core.field import RATIONALS, FieldSpec
from monodec.core.ideal import MonomialIdeal, require_proper_nonzero, require_squarefree
from monodec.core.monomial import Monomial, VarSubset
from monodec.errors import OrderError
from monodec.homology.betti import has_linear_resolution, is_componentwise_linear

LOGGER = logging.getLogger(__name__)


def _dual_of(ideal: MonomialIdeal, operation: str) -> MonomialIdeal:
    require_squarefree(ideal, operation)
    require_proper_nonzero(ideal, operation)
    return alexander_dual(ideal)


def is_cohen_macaulay(
    ideal: MonomialIdeal, field: FieldSpec = RATIONALS, caps: Caps = DEFAULT_CAPS
) -> bool:
    return has_linear_resolution(_dual_of(ideal, "is_cohen_macaulay"), field, caps)


def is_sequentially_cm(
    ideal: MonomialIdeal, field: FieldSpec = RATIONALS, caps: Caps = DEFAULT_CAPS
) -> bool:
    return is_componentwise_linear(_dual_of(ideal, "is_sequentially_cm"), field, caps)


def dual_of_complex(complex_: SimplicialComplex) -> MonomialIdeal:
    """(I_Delta)^vee, generated by x_{V minus F} over the facets F."""
    return alexander_dual(stanley_reisner_ideal(complex_))


def _complement(complex_: SimplicialComplex, facet: VarSubset) -> Monomial:
    return Monomial.from_subset(complex_.n, set(range(complex_.n)) - facet)


def shelling_to_lq_order(
    complex_: SimplicialComplex, order: Sequence[VarSubset]
) -> tuple[Monomial, ...]:
    """F_1, ..., F_s becomes x_{V minus F_1}, ..., x_{V minus F_s}."""
    if set(map(frozenset, order)) != set(complex_.facets):
        raise OrderError(f"Facet order is not a permutation of the facets of {complex_}")
    return tuple(_complement(complex_, frozenset(f)) for f in order)


def lq_to_shelling_order(
    complex_: SimplicialComplex, order: Sequence[Monomial]
) -> tuple[VarSubset, ...]:
    """Inverse of shelling_to_lq_order for an order of the dual's generators."""
    full = frozenset(range(complex_.n))
    facets = tuple(full - u.support for u in order)
    if set(facets) != set(complex_.facets):
        raise OrderError(f"Generator order does not match the facets of {complex_}")
    return facets
