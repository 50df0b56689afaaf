"""Endomorphism symmetry breaking in finite graphs.

Endomorphism monoids, motion and orbit norms, distinguishing and endomorphism
distinguishing numbers, exact distinguishability bounds, and the explicit
colorings for cycles and paths.
"""

from .bounds import (
    BoundReport,
    MonteCarloEstimate,
    monte_carlo_distinguishing,
    motion_lemma_check,
    orbit_norm_lemma_check,
    russell_sundaram_check,
)
from .breaking import (
    CapExceeded,
    DistResult,
    distinguishing_number,
    endo_distinguishing_number,
    find_color_preserving_auto,
    find_color_preserving_endo,
    is_auto_distinguishing,
    is_endo_distinguishing,
    preserves_coloring,
)
from .census import invariant_profile
from .constructions import (
    check_dist2_identification,
    check_fixed_points_connected,
    even_cycle_coloring,
    path_coloring,
    pendant_fold,
    tree_lemma_census,
)
from .endo import (
    automorphism_motion,
    count_automorphisms,
    count_endomorphisms,
    endomorphism_motion,
    endomorphism_orbit_norm,
    enumerate_automorphisms,
    enumerate_endomorphisms,
    find_isomorphism,
    fixed_points,
    is_automorphism,
    is_core,
    is_endomorphism,
    is_rigid,
    motion_of,
    orbit_norm_of,
    orbit_partition,
)
from .graph import (
    Graph,
    GraphTooLarge,
    cartesian_power,
    distance,
    is_tree,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_hypercube,
    make_path,
    pendant_vertices,
    random_tree,
)
from .graph6 import parse_graph6, write_graph6

__version__ = "0.1.0"
