"""Membership checks for the classes G(n, k, lambda, s) and their minimum edge counts."""

import math
from itertools import combinations
from typing import Callable, Optional

import networkx as nx

from src.models.class_report import ClassParams, ClassReport, MinEdgesResult
from src.models.errors import CapabilityError, InputError
from src.models.graph import Edge, UndirectedGraph
from src.services.bitsets import diameter_of_masks, distances_from, masks_of
from src.services.distances import min_degree

MIN_EDGES_VERTEX_CAP = 10
# networkx ships an isomorph-free atlas of every graph on at most 7 vertices.
ATLAS_VERTEX_LIMIT = 7
DEFAULT_MIN_EDGES_BUDGET = 2_000_000


def _far_pair(masks: list[int], bound: int) -> Optional[tuple[int, int, float]]:
    """First (a, b) in lexicographic order with d(a, b) > bound."""
    for source in range(len(masks)):
        row = distances_from(masks, source)
        for target, dist in enumerate(row):
            if dist > bound:
                return source, target, dist
    return None


def _deletion_masks(base: list[int], removed: tuple[Edge, ...]) -> list[int]:
    masks = list(base)
    for a, b in removed:
        masks[a] &= ~(1 << b)
        masks[b] &= ~(1 << a)
    return masks


def in_class(g: UndirectedGraph, p: ClassParams) -> ClassReport:
    """Decide whether g belongs to G(n, k, lambda, s).

    Every edge subset F with |F| <= s is deleted in turn; the first subset
    (by size, then lexicographically) leaving diameter > lambda is returned
    as the witness. A disconnected input fails with a violating pair at
    distance inf.

    Args:
        g: Graph to check.
        p: Class parameters.

    Returns:
        ClassReport with a witness when g is not a member.

    Raises:
        InputError: If g has no vertices.
    """
    if g.n == 0:
        raise InputError("class membership of the empty graph is undefined")

    masks = masks_of(g)
    far = _far_pair(masks, p.k)
    if far is not None:
        a, b, dist = far
        return ClassReport(params=p, member=False, violating_pair=(a, b), witness_distance=dist)

    edges = g.sorted_edges()
    for size in range(1, min(p.s, len(edges)) + 1):
        for removed in combinations(edges, size):
            value = diameter_of_masks(_deletion_masks(masks, removed), cutoff=p.lam)
            if value > p.lam:
                # the cutoff stops early, so recompute the exact value for the report
                exact = diameter_of_masks(_deletion_masks(masks, removed))
                return ClassReport(
                    params=p,
                    member=False,
                    violating_deletion=removed,
                    witness_distance=exact,
                )
    return ClassReport(params=p, member=True)


def check_observation1(g: UndirectedGraph, p: ClassParams) -> bool:
    """Minimum degree of a member is at least s + 1."""
    return min_degree(g) >= p.s + 1


def check_edge_disjoint_paths(g: UndirectedGraph, p: ClassParams) -> bool:
    """Every pair of vertices is joined by s + 1 edge-disjoint paths."""
    if g.n <= 1:
        return True
    return nx.edge_connectivity(g.nx_graph) >= p.s + 1


def find_adjacent_degree2_pair(g: UndirectedGraph) -> Optional[tuple[int, int, int, int]]:
    """Find adjacent degree-2 vertices u, v with distinct outer neighbours.

    x is u's other neighbour and y is v's. Configurations with x == y are
    skipped; the smallest valid (u, v) in lexicographic order wins.

    Returns:
        (u, v, x, y), or None when no valid configuration exists.
    """
    for u in g.vertices():
        if g.degree(u) != 2:
            continue
        for v in sorted(g.neighbors(u)):
            if g.degree(v) != 2:
                continue
            (x,) = g.neighbors(u) - {v}
            (y,) = g.neighbors(v) - {u}
            if x != y:
                return u, v, x, y
    return None


def _member_edge_sets(
    n: int,
    p: ClassParams,
    budget: int,
    on_graph: Optional[Callable[[], None]],
) -> MinEdgesResult:
    """Enumerate labelled edge sets by increasing size under a budget."""
    pairs = list(combinations(range(n), 2))
    examined = 0
    start = math.ceil(n * (p.s + 1) / 2) if n > 1 else 0
    for size in range(start, len(pairs) + 1):
        for chosen in combinations(pairs, size):
            if examined >= budget:
                return MinEdgesResult(n=n, params=p, min_edges=size, proven=False, graphs_examined=examined)
            examined += 1
            if on_graph:
                on_graph()
            degrees = [0] * n
            for a, b in chosen:
                degrees[a] += 1
                degrees[b] += 1
            if n > 1 and min(degrees) < p.s + 1:
                continue
            graph = UndirectedGraph.from_edges(n, chosen)
            if in_class(graph, p).member:
                return MinEdgesResult(
                    n=n, params=p, min_edges=size, proven=True, witness=graph, graphs_examined=examined
                )
    return MinEdgesResult(n=n, params=p, min_edges=None, proven=True, graphs_examined=examined)


def min_edges_in_class(
    n: int,
    p: ClassParams,
    budget: int = DEFAULT_MIN_EDGES_BUDGET,
    on_graph: Optional[Callable[[], None]] = None,
) -> MinEdgesResult:
    """Compute M(n, k, lambda, s), the fewest edges of an n-vertex member.

    Up to ATLAS_VERTEX_LIMIT vertices the isomorph-free atlas is scanned in
    order of edge count, which is exact. Larger n (up to the cap) enumerate
    labelled edge sets of increasing size, starting from the degree bound
    ceil(n(s+1)/2); if the budget runs out the result is a lower bound only.

    Args:
        n: Vertex count.
        p: Class parameters.
        budget: Maximum number of candidate graphs examined.
        on_graph: Optional callback invoked once per candidate (progress bars).

    Returns:
        MinEdgesResult; min_edges is None when no member exists.

    Raises:
        InputError: If n < 1 or budget < 1.
        CapabilityError: If n exceeds MIN_EDGES_VERTEX_CAP.
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    if budget < 1:
        raise InputError(f"budget must be positive, got {budget}")
    if n > MIN_EDGES_VERTEX_CAP:
        raise CapabilityError(f"min-edges search is capped at n={MIN_EDGES_VERTEX_CAP}, got n={n}")
    if n > ATLAS_VERTEX_LIMIT:
        return _member_edge_sets(n, p, budget, on_graph)

    examined = 0
    # the atlas is ordered by vertex count, then edge count
    for atlas_graph in nx.graph_atlas_g():
        if atlas_graph.number_of_nodes() != n:
            continue
        examined += 1
        if on_graph:
            on_graph()
        graph = UndirectedGraph.from_networkx(atlas_graph)
        if in_class(graph, p).member:
            return MinEdgesResult(
                n=n, params=p, min_edges=graph.m, proven=True, witness=graph, graphs_examined=examined
            )
    return MinEdgesResult(n=n, params=p, min_edges=None, proven=True, graphs_examined=examined)
