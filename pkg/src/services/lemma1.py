"""Two-step reach orientation of F = H[S'] together with E[S', S]."""

import networkx as nx

from src.models.errors import InputError, PreconditionError
from src.models.graph import INF, Arc, Edge, normalize_edge
from src.models.partition import Lemma1Instance, Lemma1Verdict

LEMMA1_BOUND = 2


def validate_instance(inst: Lemma1Instance) -> None:
    """Check the instance preconditions.

    Raises:
        PreconditionError: Naming the smallest offending vertex when S and S'
            overlap, some w in S' has no neighbour in S, or H[S'] has a
            single-vertex component.
    """
    host = inst.host
    for vertex in sorted(inst.s_set | inst.s_prime):
        if not 0 <= vertex < host.n:
            raise PreconditionError(f"vertex {vertex} is not in the host graph", vertex)
    overlap = inst.s_set & inst.s_prime
    if overlap:
        vertex = min(overlap)
        raise PreconditionError(f"vertex {vertex} is in both S and S'", vertex)
    for w in sorted(inst.s_prime):
        if not host.neighbors(w) & inst.s_set:
            raise PreconditionError(f"vertex {w} of S' has no neighbour in S", w)
        if not host.neighbors(w) & inst.s_prime:
            raise PreconditionError(f"vertex {w} is a trivial component of H[S']", w)


def _color_components(inst: Lemma1Instance) -> tuple[dict[int, int], set[Edge]]:
    """BFS spanning forest of H[S'] with depth-parity colours.

    Colour 0 (A) at even depth, 1 (B) at odd depth. Each tree is rooted at
    the smallest id of its component and neighbours are visited in id order.
    """
    inner = inst.host.nx_graph.subgraph(inst.s_prime)
    color: dict[int, int] = {}
    tree_edges: set[Edge] = set()
    for component in sorted(nx.connected_components(inner), key=min):
        root = min(component)
        color[root] = 0
        for parent, child in nx.bfs_edges(inner.subgraph(component), root, sort_neighbors=sorted):
            color[child] = 1 - color[parent]
            tree_edges.add(normalize_edge(parent, child))
    return color, tree_edges


def orient_lemma1(inst: Lemma1Instance) -> dict[Edge, Arc]:
    """Orient every edge of F so each w in S' is within 2 steps of S both ways.

    Tree edges go B -> A. A-vertices send their S-edges into S; S sends its
    edges into B-vertices. Non-tree edges of H[S'] go B -> A when the ends
    differ in colour and from the lower id to the higher id otherwise.

    Args:
        inst: Host graph with disjoint vertex sets S and S'.

    Returns:
        Mapping from each edge of F (canonical pair) to its arc.

    Raises:
        PreconditionError: If the instance violates its preconditions.
    """
    validate_instance(inst)
    color, tree_edges = _color_components(inst)
    arcs: dict[Edge, Arc] = {}
    for edge in sorted(inst.subgraph_edges()):
        a, b = edge
        if a in color and b in color:
            if color[a] != color[b]:
                arcs[edge] = (a, b) if color[a] == 1 else (b, a)
            else:
                # only non-tree edges can join equal colours
                arcs[edge] = (a, b)
        else:
            inner, outer = (a, b) if a in color else (b, a)
            arcs[edge] = (inner, outer) if color[inner] == 0 else (outer, inner)
    return arcs


def verify_lemma1(inst: Lemma1Instance, arcs: dict[Edge, Arc] | list[Arc]) -> Lemma1Verdict:
    """Check d(S, w) <= 2 and d(w, S) <= 2 for every w in S'.

    Only arcs of F are used. Vertices are checked in id order, d(S, w)
    before d(w, S); the first failure is reported.

    Raises:
        InputError: If the arcs do not direct exactly the edges of F.
    """
    arc_list = list(arcs.values()) if isinstance(arcs, dict) else list(arcs)
    covered = [normalize_edge(a, b) for a, b in arc_list]
    if len(set(covered)) != len(covered) or set(covered) != set(inst.subgraph_edges()):
        raise InputError("arcs must direct exactly the edges of F")
    if not inst.s_prime:
        return Lemma1Verdict(holds=True)

    digraph = nx.DiGraph()
    digraph.add_nodes_from(inst.s_set | inst.s_prime)
    digraph.add_edges_from(arc_list)
    sources = sorted(inst.s_set)
    if sources:
        forward = nx.multi_source_dijkstra_path_length(digraph, sources, cutoff=LEMMA1_BOUND)
        backward = nx.multi_source_dijkstra_path_length(
            digraph.reverse(copy=False), sources, cutoff=LEMMA1_BOUND
        )
    else:
        forward = backward = {}
    for w in sorted(inst.s_prime):
        if w not in forward:
            return Lemma1Verdict(holds=False, vertex=w, direction="from_s", distance=_distance_to(digraph, sources, w))
        if w not in backward:
            return Lemma1Verdict(
                holds=False,
                vertex=w,
                direction="to_s",
                distance=_distance_to(digraph.reverse(copy=False), sources, w),
            )
    return Lemma1Verdict(holds=True)


def _distance_to(digraph: nx.DiGraph, sources: list[int], target: int) -> float:
    """Exact set distance, used only to fill in failure reports."""
    if not sources:
        return INF
    lengths = nx.multi_source_dijkstra_path_length(digraph, sources)
    return lengths.get(target, INF)
