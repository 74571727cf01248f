"""Exact combinatorics of Minkowski sums of standard simplices."""

from __future__ import annotations

from .errors import (CapabilityError, DomainError, InvariantError, MinksumError, PreconditionError,
                     StructureError)
from .family import SimplexFamily, dimension, reduce
from .polynomial import FPolynomial
from .repfn import RepFunction, multiplicity_map, vertices
from .skeleton import SkeletonGraph, build_skeleton, f_vector
from .master import MasterFamily, build_master

__version__ = "0.1.0"

__all__ = [
    "CapabilityError", "DomainError", "FPolynomial", "InvariantError", "MasterFamily", "MinksumError",
    "PreconditionError", "RepFunction", "SimplexFamily", "SkeletonGraph", "StructureError",
    "build_master", "build_skeleton", "dimension", "f_vector", "multiplicity_map", "reduce", "vertices",
]
