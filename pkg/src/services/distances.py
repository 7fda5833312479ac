"""Distance machinery shared by every module."""

from typing import Iterable

import networkx as nx
import numpy as np

from src.models.errors import InputError
from src.models.graph import (
    INF,
    DiameterCertificate,
    Edge,
    GraphLike,
    Orientation,
    UndirectedGraph,
)


def _check_vertex(g: GraphLike, vertex: int) -> None:
    if not 0 <= vertex < g.n:
        raise InputError(f"vertex {vertex} out of range for n={g.n}")


def bfs_distances(g: GraphLike, source: int) -> np.ndarray:
    """Unweighted shortest-path distances from ``source``.

    Works for undirected graphs and orientations (arcs are followed forward).

    Args:
        g: Graph or orientation.
        source: Start vertex.

    Returns:
        Float array of length n with np.inf for unreachable vertices.

    Raises:
        InputError: If source is not a vertex of g.
    """
    _check_vertex(g, source)
    dist = np.full(g.n, INF)
    for vertex, length in nx.single_source_shortest_path_length(g.nx_graph, source).items():
        dist[vertex] = length
    return dist


def distance_matrix(g: GraphLike) -> np.ndarray:
    """All-pairs distance matrix with np.inf for unreachable pairs."""
    dist = np.full((g.n, g.n), INF)
    for source, lengths in nx.all_pairs_shortest_path_length(g.nx_graph):
        for target, length in lengths.items():
            dist[source, target] = length
    return dist


def diameter(g: GraphLike) -> DiameterCertificate:
    """Compute the (directed) diameter together with its distance matrix.

    Args:
        g: Graph or orientation with at least one vertex.

    Returns:
        Certificate whose diameter is inf iff g is not (strongly) connected.

    Raises:
        InputError: If g has no vertices.
    """
    if g.n == 0:
        raise InputError("diameter of the empty graph is undefined")
    dist = distance_matrix(g)
    strongly_connected = bool(np.isfinite(dist).all())
    value = float(dist.max()) if strongly_connected else INF
    return DiameterCertificate(dist=dist, diameter=value, strongly_connected=strongly_connected)


def min_degree(g: UndirectedGraph) -> int:
    """Minimum vertex degree.

    Raises:
        InputError: If g has no vertices.
    """
    if g.n == 0:
        raise InputError("minimum degree of the empty graph is undefined")
    return min(g.degree(vertex) for vertex in g.vertices())


def is_connected(g: UndirectedGraph) -> bool:
    """True for connected graphs; the empty graph counts as connected."""
    return g.n == 0 or nx.is_connected(g.nx_graph)


def is_strongly_connected(o: Orientation) -> bool:
    return o.n == 0 or nx.is_strongly_connected(o.nx_graph)


def remove_edges(g: UndirectedGraph, removed: Iterable[Edge]) -> UndirectedGraph:
    """Return g - F for an iterable F of edges of g.

    Raises:
        InputError: If some element of F is not an edge of g.
    """
    removed = list(removed)
    for a, b in removed:
        if not g.has_edge(a, b):
            raise InputError(f"{{{a},{b}}} is not an edge of the graph")
    return g.without_edges(removed)
