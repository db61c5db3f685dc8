"""Scarf complexes of powers of extremal ideals.

Submodules:

- ``lattice``: points of N^r_q, the total order, normal forms, transforms
- ``ideal``: monomials, lcm labels, E_q^r, label-based Scarf test, chain complexes
- ``scarfgeo``: half-space witnesses, polytope lattice points, U-complexes
- ``r3``: the facet and minimal-nonface catalog for cubes (r = 3)
- ``morse``: the omega-induced acyclic matching and its verification
- ``bounds``: closed-form betti bounds, Taylor and L counts, diagnostics
"""

from .errors import DomainError, InvariantViolation, ResourceLimitError, UnsupportedError
from .lattice import Face, compare_faces, compare_points, enumerate_points, partition_form

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "Face",
    "InvariantViolation",
    "ResourceLimitError",
    "UnsupportedError",
    "compare_faces",
    "compare_points",
    "enumerate_points",
    "partition_form",
]
