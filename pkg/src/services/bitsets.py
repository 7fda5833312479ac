"""Bit-set BFS kernel.

Vertex sets are Python ints (bit i set means vertex i is in the set) and a
graph is a list of out-neighbour masks. The search and class-check services
evaluate thousands of diameters, and frontier expansion over masks avoids
building networkx objects in those loops.
"""

from typing import Iterable, Iterator, Optional

from src.models.graph import INF, Arc, Edge, Orientation, UndirectedGraph


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(n: int) -> int:
    return (1 << n) - 1


def masks_from_edges(n: int, edges: Iterable[Edge]) -> list[int]:
    """Symmetric neighbour masks of an undirected edge set."""
    masks = [0] * n
    for a, b in edges:
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    return masks


def masks_from_arcs(n: int, arcs: Iterable[Arc]) -> list[int]:
    """Out-neighbour masks of an arc set."""
    masks = [0] * n
    for a, b in arcs:
        masks[a] |= 1 << b
    return masks


def masks_of(g: UndirectedGraph | Orientation) -> list[int]:
    if isinstance(g, Orientation):
        return masks_from_arcs(g.n, g.arcs)
    return masks_from_edges(g.n, g.edges)


def distances_from(masks: list[int], source: int) -> list[float]:
    """BFS distances from ``source``; INF for unreachable vertices."""
    n = len(masks)
    dist: list[float] = [INF] * n
    dist[source] = 0
    reached = frontier = 1 << source
    depth = 0
    while frontier:
        depth += 1
        grown = 0
        for vertex in iter_bits(frontier):
            grown |= masks[vertex]
        frontier = grown & ~reached
        reached |= frontier
        for vertex in iter_bits(frontier):
            dist[vertex] = depth
    return dist


def eccentricity(masks: list[int], source: int, cutoff: Optional[int] = None) -> float:
    """Largest BFS distance from ``source``.

    Returns INF when some vertex is unreachable. With a cutoff the search
    stops as soon as the depth exceeds it and returns cutoff + 1, which is
    enough for "is this at most cutoff" questions.
    """
    everything = full_mask(len(masks))
    reached = frontier = 1 << source
    depth = 0
    while reached != everything:
        grown = 0
        for vertex in iter_bits(frontier):
            grown |= masks[vertex]
        frontier = grown & ~reached
        if not frontier:
            return INF
        depth += 1
        if cutoff is not None and depth > cutoff:
            return cutoff + 1
        reached |= frontier
    return depth


def diameter_of_masks(masks: list[int], cutoff: Optional[int] = None) -> float:
    """Maximum eccentricity; same cutoff contract as eccentricity()."""
    worst: float = 0
    for source in range(len(masks)):
        ecc = eccentricity(masks, source, cutoff)
        if ecc > worst:
            worst = ecc
            if worst == INF or (cutoff is not None and worst > cutoff):
                return worst
    return worst


def total_distance(masks: list[int]) -> float:
    """Sum of all pairwise distances, INF if any pair is unreachable."""
    total = 0
    for source in range(len(masks)):
        row = distances_from(masks, source)
        row_total = sum(row)
        if row_total == INF:
            return INF
        total += row_total
    return total
