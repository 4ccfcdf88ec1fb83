"""Splitting numbers and splitting types of equivariant vector bundles over
smooth complete toric varieties.

Weights of a toric surface are given as a circular sequence (a_1, ..., a_s)
with v_{i-1} + v_{i+1} + a_i v_i = 0; ``Fan.from_graph`` builds its fan.
"""

from ._core import (
    Error,
    Fan,
    blowup,
    bundle_split,
    canonical_form,
    euler_split,
    q_matrix,
    splitting_types,
    surfaces,
    table41,
    tangent_split,
    tangent_splitting_system,
)

__all__ = [
    "Error",
    "Fan",
    "blowup",
    "bundle_split",
    "canonical_form",
    "euler_split",
    "q_matrix",
    "splitting_types",
    "surfaces",
    "table41",
    "tangent_split",
    "tangent_splitting_system",
]
