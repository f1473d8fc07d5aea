"""Randomized property testing of convex position in R^d.

Thin re-export of the compiled core; see the individual docstrings.
"""

from ._core import (
    ConstraintError,
    ParseError,
    PointSet,
    brute_force_convex_position,
    convex_minus,
    convex_plus,
    convex_position_test,
    derive_close_params,
    derive_far_params,
    gen_close,
    gen_convex,
    gen_sawtooth,
    gen_triangle_centroid,
    lemma3_report,
    max_convex_subset_2d,
    min_removal_to_convex,
    minimal_far_sample_size,
    orientation,
    read_point_set,
    split_seed,
    write_point_set,
)

__all__ = [
    "ConstraintError",
    "ParseError",
    "PointSet",
    "brute_force_convex_position",
    "convex_minus",
    "convex_plus",
    "convex_position_test",
    "derive_close_params",
    "derive_far_params",
    "gen_close",
    "gen_convex",
    "gen_sawtooth",
    "gen_triangle_centroid",
    "lemma3_report",
    "max_convex_subset_2d",
    "min_removal_to_convex",
    "minimal_far_sample_size",
    "orientation",
    "read_point_set",
    "split_seed",
    "write_point_set",
]
