"""Exhaustive searches without pruning or memoization.

These are slow and only meant for small subjects: they re-decide what the pruned
searches decide so that refutations can be confirmed independently.
"""

from itertools import permutations

from monodec.classify.decomposition import is_shedding_vertex, is_shelling_order
from monodec.classify.exchange import is_weakly_polymatroidal_under
from monodec.classify.quotients import has_linear_quotients_under
from monodec.classify.splitting import SplitReading, base_case, split_at
from monodec.core.complex import SimplicialComplex, deletion, link
from monodec.core.ideal import MonomialIdeal

# Largest number of variables, generators or facets a reference search accepts.
REFERENCE_LIMIT = 7


def _guard(size: int, what: str) -> None:
    if size > REFERENCE_LIMIT:
        raise ValueError(f"Reference search over {size} {what} is too large")


def wpm_order_exists(ideal: MonomialIdeal) -> bool:
    _guard(ideal.n, "variables")
    return any(is_weakly_polymatroidal_under(ideal, p) for p in permutations(range(ideal.n)))


def lq_order_exists(ideal: MonomialIdeal) -> bool:
    _guard(len(ideal.gens), "generators")
    return any(has_linear_quotients_under(ideal, p) for p in permutations(ideal.gens))


def shelling_exists(complex_: SimplicialComplex) -> bool:
    _guard(len(complex_.facets), "facets")
    return any(is_shelling_order(complex_, p) for p in permutations(complex_.facets))


def splittable(ideal: MonomialIdeal, reading: SplitReading = SplitReading.LITERAL) -> bool:
    if base_case(ideal) is not None:
        return True
    for vertex in range(ideal.n):
        split = split_at(ideal, vertex, reading)
        if split is not None and splittable(split.inner, reading) and splittable(
            split.outer, reading
        ):
            return True
    return False


def vertex_decomposable(complex_: SimplicialComplex) -> bool:
    if complex_.is_simplex:
        return True
    return any(
        is_shedding_vertex(complex_, v)
        and vertex_decomposable(link(complex_, [v]))
        and vertex_decomposable(deletion(complex_, [v]))
        for v in sorted(complex_.vertices)
    )
