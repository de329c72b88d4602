import random

import pytest

from coveralg import borel
from coveralg.complexes import SimplicialComplex


@pytest.fixture
def villarreal():
    """Non-pure complex on 8 vertices whose squarefree cover algebra is
    standard graded while the full cover algebra is not."""
    return SimplicialComplex(
        8,
        [
            (1, 2), (3, 4), (5, 6), (7, 8),
            (1, 3, 7), (1, 4, 8), (3, 5, 7), (4, 5, 8),
            (2, 3, 6, 8), (2, 4, 6, 7),
        ],
    )


@pytest.fixture
def five_cycle():
    """Five facets arranged in a special odd 5-cycle on vertices 1..5."""
    return SimplicialComplex(7, [(1, 2, 7), (2, 3), (3, 4), (4, 5, 7), (1, 5, 6)])


@pytest.fixture
def three_cycle():
    """Three triangles in a special odd 3-cycle; the two algebras agree."""
    return SimplicialComplex(6, [(1, 2, 6), (2, 3, 4), (4, 5, 6)])


@pytest.fixture
def square_chord_small():
    """Four facets on 5 vertices; intersection graph is a square with a
    chord, and the cover algebra is standard graded as far as we check."""
    return SimplicialComplex(5, [(1, 2, 5), (2, 3), (3, 4, 5), (1, 4)])


@pytest.fixture
def square_chord_large():
    """Same intersection graph on 6 vertices, but with an indecomposable
    non-squarefree 2-cover."""
    return SimplicialComplex(6, [(1, 2, 6), (2, 3, 4), (4, 5, 6), (1, 5)])


@pytest.fixture
def borel_pair_complex():
    """Facet complex of the Borel set generated by {1,4,5} and {2,3,4}."""
    return borel.complex_of(borel.borel_spec(5, [(1, 4, 5), (2, 3, 4)]))


@pytest.fixture
def non_borel_complex():
    """Facet complex of B({1,4},{1,2,3}); its squarefree 2-cover ideal
    is not squarefree Borel."""
    return borel.complex_of(borel.borel_spec(4, [(1, 4), (1, 2, 3)]))


@pytest.fixture
def rng():
    return random.Random(20260823)
