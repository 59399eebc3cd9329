"""Shared fixtures: the reference ideals used across the test modules."""

import pytest

from monodec.core import MonomialIdeal, VariableSet, stanley_reisner_complex
from monodec.harness.parser import parse_ideal
from monodec.homology import clear_homology_cache

PATH_P4 = "x1*x2, x2*x3, x3*x4"
CYCLE_C4 = "x1*x2, x2*x3, x3*x4, x1*x4"
COLON_INSTABILITY = "x1*x3, x1*x4, x1*x6, x2*x3, x2*x4, x3*x5, x4*x5, x4*x6, x5*x6"
CUBIC_NON_WPM = (
    "x1*x2*x3, x1*x2*x4, x1*x2*x5, x1*x2*x6, x1*x4*x5, x1*x5*x6, "
    "x2*x3*x4, x3*x4*x5, x3*x4*x6, x3*x5*x6, x4*x5*x6"
)
CUBIC_DUAL = (
    "x1*x3*x4, x1*x3*x5, x1*x3*x6, x1*x4*x5, x1*x4*x6, "
    "x2*x3*x5, x2*x4*x5, x2*x4*x6, x2*x5*x6, x3*x4*x5*x6"
)
SQUARE_PATH = "x1^2, x1*x2, x2^2"

# Six-vertex triangulation of the real projective plane.
RP2_FACETS = [
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
    (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5),
]


def ideal_of(text: str, n_vars=None) -> MonomialIdeal:
    return parse_ideal(text, n_vars).ideal


@pytest.fixture(autouse=True)
def fresh_homology_cache():
    yield
    clear_homology_cache()


@pytest.fixture
def path_ideal() -> MonomialIdeal:
    return ideal_of(PATH_P4)


@pytest.fixture
def cycle_ideal() -> MonomialIdeal:
    return ideal_of(CYCLE_C4)


@pytest.fixture
def colon_ideal() -> MonomialIdeal:
    return ideal_of(COLON_INSTABILITY)


@pytest.fixture
def cubic_ideal() -> MonomialIdeal:
    return ideal_of(CUBIC_NON_WPM)


@pytest.fixture
def cubic_dual() -> MonomialIdeal:
    return ideal_of(CUBIC_DUAL)


@pytest.fixture
def square_path() -> MonomialIdeal:
    return ideal_of(SQUARE_PATH)


@pytest.fixture
def rp2_complex():
    from monodec.core import SimplicialComplex

    return SimplicialComplex.from_faces(VariableSet.standard(6), RP2_FACETS)


@pytest.fixture
def path_complex(path_ideal):
    return stanley_reisner_complex(path_ideal)
