"""Finite Hausdorff-metric toolkit.

Thin re-export of the compiled core: ambient spaces, compact sets,
Hausdorff distances, hyperspace verification batteries, quotient
approximation, and the built-in worked examples.
"""

from ._core import (
    ActionError,
    CapacityError,
    CompactSet,
    DegenerateQuotientError,
    Space,
    UsageError,
    demo_collision_family,
    demo_example1_lines,
    directed_hausdorff,
    disk_pullback_space,
    epsilon_net,
    euclid_cutoff_space,
    hausdorff_distance,
    hausdorff_distance_fast,
    matrix_space,
    matrix_space_from_points,
    mds_embed_2d,
    morse_flow_demo,
    permutation_quotient,
    run_compactness_suite,
    run_continuity_suite,
    run_metric_suite,
    run_universal_suite,
    verify_metric_axioms,
)

__version__ = "0.1.0"

__all__ = [
    "ActionError",
    "CapacityError",
    "CompactSet",
    "DegenerateQuotientError",
    "Space",
    "UsageError",
    "demo_collision_family",
    "demo_example1_lines",
    "directed_hausdorff",
    "disk_pullback_space",
    "epsilon_net",
    "euclid_cutoff_space",
    "hausdorff_distance",
    "hausdorff_distance_fast",
    "matrix_space",
    "matrix_space_from_points",
    "mds_embed_2d",
    "morse_flow_demo",
    "permutation_quotient",
    "run_compactness_suite",
    "run_continuity_suite",
    "run_metric_suite",
    "run_universal_suite",
    "verify_metric_axioms",
]
