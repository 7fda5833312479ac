"""Bridge (cut-edge) detection by a single low-link DFS."""

from typing import Optional

from src.models.errors import BridgeError
from src.models.graph import Edge, UndirectedGraph, normalize_edge


def bridges(g: UndirectedGraph) -> frozenset[Edge]:
    """Find every edge whose removal increases the number of components.

    Iterative version of the preorder/low-link DFS, so deep paths do not hit
    the recursion limit. Graphs are simple, so skipping the parent vertex is
    the same as skipping the tree edge.

    Args:
        g: Undirected graph (need not be connected).

    Returns:
        The bridges as canonical (a, b) pairs.
    """
    preorder = [-1] * g.n
    low = [0] * g.n
    found: set[Edge] = set()
    counter = 0

    for root in g.vertices():
        if preorder[root] != -1:
            continue
        preorder[root] = low[root] = counter
        counter += 1
        # (vertex, parent, remaining neighbours)
        stack = [(root, -1, iter(sorted(g.neighbors(root))))]
        while stack:
            vertex, parent, pending = stack[-1]
            child = next(pending, None)
            if child is None:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[vertex])
                    if low[vertex] > preorder[parent]:
                        found.add(normalize_edge(parent, vertex))
                continue
            if child == parent:
                continue
            if preorder[child] == -1:
                preorder[child] = low[child] = counter
                counter += 1
                stack.append((child, vertex, iter(sorted(g.neighbors(child)))))
            else:
                low[vertex] = min(low[vertex], preorder[child])
    return frozenset(found)


def first_bridge(g: UndirectedGraph) -> Optional[Edge]:
    """Smallest bridge in (a, b) order, or None for bridgeless graphs."""
    found = bridges(g)
    return min(found) if found else None


def require_bridgeless(g: UndirectedGraph) -> None:
    """Raise BridgeError naming the smallest bridge, if there is one."""
    bridge = first_bridge(g)
    if bridge is not None:
        raise BridgeError(bridge)
