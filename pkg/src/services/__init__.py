"""Graph algorithms, orientation construction, search and IO services."""

from src.services.bridges import bridges, require_bridgeless
from src.services.class_checker import (
    check_edge_disjoint_paths,
    check_observation1,
    find_adjacent_degree2_pair,
    in_class,
    min_edges_in_class,
)
from src.services.distances import (
    bfs_distances,
    diameter,
    is_connected,
    is_strongly_connected,
    min_degree,
    remove_edges,
)
from src.services.exact_search import (
    improve_orientation,
    oriented_diameter_bruteforce,
    oriented_diameter_exact,
    robbins_orient,
)
from src.services.lemma1 import orient_lemma1, verify_lemma1
from src.services.loader import load_graph, load_orientation, parse_graph, parse_orientation
from src.services.observations import check_observations
from src.services.orienter import (
    orient_d3,
    orient_partition,
    orient_via_spanning_subgraph,
    verify_theorem1,
)
from src.services.partitioner import partition_vertices
from src.services.reporter import emit_graph, emit_orientation, write_json
from src.services.witness import general_orientation_bounds, search_witness

__all__ = [
    "bfs_distances",
    "diameter",
    "min_degree",
    "is_connected",
    "is_strongly_connected",
    "remove_edges",
    "bridges",
    "require_bridgeless",
    "in_class",
    "min_edges_in_class",
    "find_adjacent_degree2_pair",
    "check_observation1",
    "check_edge_disjoint_paths",
    "orient_lemma1",
    "verify_lemma1",
    "partition_vertices",
    "orient_d3",
    "orient_partition",
    "orient_via_spanning_subgraph",
    "verify_theorem1",
    "check_observations",
    "robbins_orient",
    "improve_orientation",
    "oriented_diameter_exact",
    "oriented_diameter_bruteforce",
    "search_witness",
    "general_orientation_bounds",
    "parse_graph",
    "parse_orientation",
    "load_graph",
    "load_orientation",
    "emit_orientation",
    "emit_graph",
    "write_json",
]
