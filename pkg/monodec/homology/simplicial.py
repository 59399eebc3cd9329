"""Reduced simplicial homology over Q or F_p from exact boundary-matrix ranks."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from sympy.polys.matrices import DomainMatrix

from monodec.config import DEFAULT_CAPS, Caps
from monodec.core.complex import SimplicialComplex, mask_bits, submasks
from monodec.core.field import RATIONALS, FieldSpec
from monodec.errors import ResourceCapError

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologyProfile:
    """Dimensions of reduced homology; dims[0] is degree -1."""

    complex: SimplicialComplex
    field: FieldSpec
    dims: tuple[int, ...]

    def dim(self, degree: int) -> int:
        idx = degree + 1
        if 0 <= idx < len(self.dims):
            return self.dims[idx]
        return 0

    @property
    def is_acyclic(self) -> bool:
        return not any(self.dims)

    def nonzero(self) -> dict[int, int]:
        return {k - 1: d for k, d in enumerate(self.dims) if d}

    def to_dict(self) -> dict[str, Any]:
        return {
            "complex": self.complex.format(),
            "field": str(self.field),
            "reduced_homology": {str(k): d for k, d in self.nonzero().items()},
        }


def matrix_rank(
    entries: dict[int, dict[int, int]], shape: tuple[int, int], field: FieldSpec
) -> int:
    """Rank of a sparse integer matrix read over the given field."""
    if not entries or 0 in shape:
        return 0
    domain = field.domain
    rows = {}
    for r, cols in entries.items():
        converted = {c: domain(v) for c, v in cols.items()}
        converted = {c: v for c, v in converted.items() if v}
        if converted:
            rows[r] = converted
    if not rows:
        return 0
    return DomainMatrix(rows, shape, domain).rank()


def _is_cone(masks: tuple[int, ...]) -> bool:
    common = masks[0]
    for f in masks[1:]:
        common &= f
    return common != 0


def compact_facets(complex_: SimplicialComplex) -> tuple[int, ...]:
    """Facet masks with the vertices renumbered 0..k-1 in their original order.

    Homology only depends on this shape, so relabeled copies share one cache entry.
    """
    position = {v: i for i, v in enumerate(sorted(complex_.vertices))}
    compacted = []
    for facet in complex_.facets:
        mask = 0
        for v in facet:
            mask |= 1 << position[v]
        compacted.append(mask)
    return tuple(sorted(compacted))


@lru_cache(maxsize=65536)
def _reduced_homology(masks: tuple[int, ...], field: FieldSpec) -> tuple[int, ...]:
    if not masks:
        return ()
    if masks == (0,):
        return (1,)
    if _is_cone(masks):
        return ()

    by_dim: dict[int, list[int]] = {}
    for face in set().union(*(submasks(f) for f in masks)):
        by_dim.setdefault(face.bit_count() - 1, []).append(face)
    top = max(by_dim)
    index = {}
    for faces in by_dim.values():
        faces.sort()
        index.update({face: pos for pos, face in enumerate(faces)})

    # ranks[k] is the rank of the boundary map from k-faces to (k-1)-faces
    ranks = {-1: 0, top + 1: 0}
    for k in range(0, top + 1):
        entries: dict[int, dict[int, int]] = {}
        for col, face in enumerate(by_dim[k]):
            for pos, v in enumerate(mask_bits(face)):
                row = index[face & ~(1 << v)]
                entries.setdefault(row, {})[col] = -1 if pos % 2 else 1
        ranks[k] = matrix_rank(entries, (len(by_dim[k - 1]), len(by_dim[k])), field)

    dims = []
    for k in range(-1, top + 1):
        dims.append(len(by_dim[k]) - ranks[k] - ranks[k + 1])
    while dims and dims[-1] == 0:
        dims.pop()
    return tuple(dims)


def reduced_homology_dims(
    complex_: SimplicialComplex, field: FieldSpec = RATIONALS, caps: Caps = DEFAULT_CAPS
) -> HomologyProfile:
    """Reduced homology dimensions of a complex over a field."""
    if len(complex_.vertices) > caps.max_vertices:
        raise ResourceCapError("max_vertices", caps.max_vertices, len(complex_.vertices))
    return HomologyProfile(complex_, field, _reduced_homology(compact_facets(complex_), field))


def clear_homology_cache() -> None:
    _reduced_homology.cache_clear()
