"""Exact cluster-structure computations for unitriangular 4x4 matrices.

The heavy lifting happens in the C++ extension; polynomials, rationals and
big counts cross the boundary as strings to stay exact.
"""

from unicluster._core import (
    catalog_ids,
    catalog_minor,
    cluster_char,
    count_comp_series,
    criterion_six,
    euler_char,
    exchange_graph,
    ext1,
    folded_mutate,
    generic_minor,
    hom,
    is_basic_maximal_rigid,
    is_projective,
    is_stable,
    is_totally_positive,
    match_minor,
    module_dim,
    mutate,
    pi_project,
    stable_hexagon,
    validate_word,
    verify,
)

__all__ = [
    "catalog_ids",
    "catalog_minor",
    "cluster_char",
    "count_comp_series",
    "criterion_six",
    "euler_char",
    "exchange_graph",
    "ext1",
    "folded_mutate",
    "generic_minor",
    "hom",
    "is_basic_maximal_rigid",
    "is_projective",
    "is_stable",
    "is_totally_positive",
    "match_minor",
    "module_dim",
    "mutate",
    "pi_project",
    "stable_hexagon",
    "validate_word",
    "verify",
]
