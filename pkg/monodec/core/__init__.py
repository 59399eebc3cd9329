"""Exact monomials, monomial ideals and simplicial complexes."""

from .complex import (
    SimplicialComplex,
    alexander_dual,
    deletion,
    dual_from_facets,
    induced_subcomplex,
    link,
    minimal_primes,
    stanley_reisner_complex,
    stanley_reisner_ideal,
)
from .field import RATIONALS, FieldSpec
from .ideal import (
    MonomialIdeal,
    colon_by_monomial,
    deg_ideal,
    minimalize,
    polarize,
    squarefree_component,
)
from .monomial import Monomial, VariableSet, VarSubset, support

__all__ = [
    "FieldSpec",
    "Monomial",
    "MonomialIdeal",
    "RATIONALS",
    "SimplicialComplex",
    "VarSubset",
    "VariableSet",
    "alexander_dual",
    "colon_by_monomial",
    "deg_ideal",
    "deletion",
    "dual_from_facets",
    "induced_subcomplex",
    "link",
    "minimal_primes",
    "minimalize",
    "polarize",
    "squarefree_component",
    "stanley_reisner_complex",
    "stanley_reisner_ideal",
    "support",
]
