"""Multigraded local cohomology of monomial quotients R/I.

Ideals are written as comma-separated monomials in x1..xd, e.g.
``Ideal("x1*x3, x2^2", 3)``. Simplicial complexes are lists of facets
with 1-based vertices. Extended degrees come back as ints or +-inf.
"""

from ._core import (
    DomainError,
    Error,
    Ideal,
    InternalConsistencyError,
    ParseError,
    ResourceCapError,
    cohomology_dim,
    cohomology_table,
    degree_complex,
    dichotomy,
    indeg,
    power_sequence,
    reduced_homology,
    regularity,
    regularity_fit,
    stanley_reisner_complex,
    stanley_reisner_ideal,
    topdeg,
)

__all__ = [
    "DomainError",
    "Error",
    "Ideal",
    "InternalConsistencyError",
    "ParseError",
    "ResourceCapError",
    "cohomology_dim",
    "cohomology_table",
    "degree_complex",
    "dichotomy",
    "indeg",
    "power_sequence",
    "reduced_homology",
    "regularity",
    "regularity_fit",
    "stanley_reisner_complex",
    "stanley_reisner_ideal",
    "topdeg",
]
