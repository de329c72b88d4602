"""Exact computations with vertex cover algebras of simplicial complexes."""

from .complexes import ComplexError, SimplicialComplex
from .errors import InputError, InternalCheckError
from .ideals import MonomialIdeal

__all__ = [
    "ComplexError",
    "InputError",
    "InternalCheckError",
    "MonomialIdeal",
    "SimplicialComplex",
]
