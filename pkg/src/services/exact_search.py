"""Exact oriented diameter by branch-and-bound, plus Robbins orientation and local search."""

import itertools
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import networkx as nx
import numpy as np

from src.models.errors import CapabilityError, InputError
from src.models.graph import INF, Arc, Edge, Orientation, UndirectedGraph
from src.models.search import ExactResult, SearchConfig
from src.services.bitsets import diameter_of_masks, masks_from_arcs, masks_from_edges, masks_of, total_distance
from src.services.bridges import require_bridgeless
from src.services.distances import is_connected

BRUTEFORCE_EDGE_LIMIT = 16
# Subtrees handed out per worker in parallel mode.
SUBTREES_PER_WORKER = 4


def _require_orientable(g: UndirectedGraph) -> None:
    if g.n == 0:
        raise InputError("graph has no vertices")
    if not is_connected(g):
        raise InputError("graph is disconnected")
    require_bridgeless(g)


def robbins_orient(g: UndirectedGraph) -> Orientation:
    """Strongly connected orientation from one depth-first search.

    Tree edges point away from the root; every other edge points from the
    later-discovered endpoint back to the earlier one.

    Raises:
        InputError: If g is empty or disconnected.
        BridgeError: If g has a bridge.
    """
    _require_orientable(g)
    graph = g.nx_graph
    order = {vertex: index for index, vertex in enumerate(nx.dfs_preorder_nodes(graph, source=0))}
    tree = set(nx.dfs_edges(graph, source=0))
    arcs: set[Arc] = set(tree)
    for a, b in g.sorted_edges():
        if (a, b) in tree or (b, a) in tree:
            continue
        arcs.add((a, b) if order[a] > order[b] else (b, a))
    return Orientation(g, frozenset(arcs))


def _objective(n: int, arcs: frozenset[Arc] | set[Arc]) -> tuple[float, float]:
    masks = masks_from_arcs(n, arcs)
    value = diameter_of_masks(masks)
    if value == INF:
        return INF, INF
    return value, total_distance(masks)


def improve_orientation(
    g: UndirectedGraph,
    o: Orientation,
    cfg: Optional[SearchConfig] = None,
) -> Orientation:
    """Hill-climb by single-arc reversals.

    A reversal is accepted when it lowers (diameter, total distance)
    lexicographically; reversals that break strong connectivity never
    qualify. Arcs are scanned in sorted order, shuffled once by cfg.seed
    when one is given.

    Args:
        g: The graph.
        o: Strongly connected orientation of g.
        cfg: Supplies seed and max_rounds.

    Returns:
        An orientation whose diameter is at most that of o.

    Raises:
        InputError: If o does not orient g or is not strongly connected.
    """
    cfg = cfg or SearchConfig()
    if o.base != g:
        raise InputError("orientation does not match the graph's edge set")
    arcs = set(o.arcs)
    best = _objective(g.n, arcs)
    if best[0] == INF:
        raise InputError("local search needs a strongly connected orientation")

    edges = g.sorted_edges()
    if cfg.seed is not None:
        rng = np.random.default_rng(cfg.seed)
        edges = [edges[i] for i in rng.permutation(len(edges))]

    for _ in range(cfg.max_rounds):
        improved = False
        for a, b in edges:
            current = (a, b) if (a, b) in arcs else (b, a)
            flipped = (current[1], current[0])
            arcs.discard(current)
            arcs.add(flipped)
            candidate = _objective(g.n, arcs)
            if candidate < best:
                best = candidate
                improved = True
            else:
                arcs.discard(flipped)
                arcs.add(current)
        if not improved:
            break
    return Orientation(g, frozenset(arcs))


class _SharedBound:
    """Best diameter published across workers; only ever decreases."""

    def __init__(self, value: float) -> None:
        self._lock = threading.Lock()
        self.value = value
        self.nodes = 0
        self.stop = False

    def publish(self, value: float) -> None:
        with self._lock:
            if value < self.value:
                self.value = value

    def spend(self) -> int:
        with self._lock:
            self.nodes += 1
            return self.nodes


@dataclass
class _SubtreeResult:
    diameter: float
    arcs: Optional[list[Arc]]
    budget_hit: bool


class _BranchAndBound:
    """Depth-first search over edge directions on the mixed graph.

    Unassigned edges stay traversable both ways, so the diameter of the
    mixed graph lower-bounds every completion.
    """

    def __init__(self, g: UndirectedGraph, order: list[Edge], cfg: SearchConfig, shared: _SharedBound) -> None:
        self.g = g
        self.order = order
        self.cfg = cfg
        self.shared = shared

    def run(self, prefix: list[Arc], incumbent: float) -> _SubtreeResult:
        masks = masks_from_edges(self.g.n, self.g.edges)
        for a, b in prefix:
            masks[b] &= ~(1 << a)
        self.best = incumbent
        self.best_arcs: Optional[list[Arc]] = None
        self.budget_hit = False
        self._descend(masks, len(prefix), list(prefix))
        return _SubtreeResult(self.best, self.best_arcs, self.budget_hit)

    def _descend(self, masks: list[int], depth: int, chosen: list[Arc]) -> None:
        if self.shared.stop:
            return
        if self.shared.spend() > self.cfg.node_budget:
            self.budget_hit = True
            self.shared.stop = True
            return
        bound = diameter_of_masks(masks, cutoff=int(self.best) - 1 if self.best != INF else None)
        if bound >= self.best or bound > self.shared.value:
            return
        if depth == len(self.order):
            self.best = bound
            self.best_arcs = list(chosen)
            self.shared.publish(bound)
            if self.cfg.target is not None and bound <= self.cfg.target:
                self.shared.stop = True
            return
        a, b = self.order[depth]
        for tail, head in ((a, b), (b, a)):
            saved = masks[head]
            masks[head] &= ~(1 << tail)
            chosen.append((tail, head))
            self._descend(masks, depth + 1, chosen)
            chosen.pop()
            masks[head] = saved


def _branch_order(g: UndirectedGraph) -> list[Edge]:
    """Edges with the largest endpoint degree sum first."""
    return sorted(g.edges, key=lambda e: (-(g.degree(e[0]) + g.degree(e[1])), e))


def _prefixes(order: list[Edge], workers: int) -> list[list[Arc]]:
    """Split the tree below the fixed first edge into independent subtrees."""
    first = order[0]
    prefixes: list[list[Arc]] = [[first]]
    depth = 1
    while len(prefixes) < workers * SUBTREES_PER_WORKER and depth < len(order):
        a, b = order[depth]
        prefixes = [p + [arc] for p in prefixes for arc in ((a, b), (b, a))]
        depth += 1
    return prefixes


def oriented_diameter_exact(g: UndirectedGraph, cfg: Optional[SearchConfig] = None) -> ExactResult:
    """Minimum diameter over all orientations of g.

    The first edge in branch order keeps a fixed direction, since reversing
    every arc preserves the diameter. The starting incumbent is a Robbins
    orientation improved by local search; subtrees whose mixed-graph
    diameter cannot beat the incumbent are pruned. With several workers the
    subtrees run on a thread pool sharing the best bound, and among equal
    optima the one from the first subtree is returned.

    Args:
        g: Connected bridgeless graph.
        cfg: Edge cap, node budget, optional early-exit target, workers.

    Returns:
        ExactResult; proven_optimal is False if the budget ran out or the
        target stopped the search above the undirected diameter.

    Raises:
        InputError: If g is empty or disconnected.
        BridgeError: If g has a bridge.
        CapabilityError: If g has more edges than cfg.edge_cap.
    """
    cfg = cfg or SearchConfig()
    _require_orientable(g)
    if g.m > cfg.edge_cap:
        raise CapabilityError(f"exact search is capped at {cfg.edge_cap} edges, got {g.m}")
    if g.m == 0:
        return ExactResult(diameter=0, orientation=Orientation(g, frozenset()), proven_optimal=True, nodes=0)

    floor = diameter_of_masks(masks_of(g))
    incumbent = improve_orientation(g, robbins_orient(g), cfg)
    best = diameter_of_masks(masks_of(incumbent))
    if best == floor or (cfg.target is not None and best <= cfg.target):
        return ExactResult(diameter=best, orientation=incumbent, proven_optimal=best == floor, nodes=0)

    order = _branch_order(g)
    shared = _SharedBound(best)
    prefixes = _prefixes(order, cfg.workers) if cfg.workers > 1 else [[order[0]]]

    def explore(prefix: list[Arc]) -> _SubtreeResult:
        return _BranchAndBound(g, order, cfg, shared).run(prefix, best)

    if cfg.workers > 1:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(explore, prefixes))
    else:
        results = [explore(prefix) for prefix in prefixes]

    budget_hit = any(r.budget_hit for r in results)
    found = [r for r in results if r.arcs is not None]
    if found:
        winner = min(found, key=lambda r: r.diameter)
        best, orientation = winner.diameter, Orientation(g, frozenset(winner.arcs or ()))
    else:
        orientation = incumbent
    stopped_by_target = cfg.target is not None and best <= cfg.target and shared.stop and not budget_hit
    proven = best == floor or not (budget_hit or stopped_by_target)
    return ExactResult(
        diameter=best,
        orientation=orientation,
        proven_optimal=proven,
        nodes=shared.nodes,
        budget_exhausted=budget_hit,
    )


def oriented_diameter_bruteforce(g: UndirectedGraph) -> tuple[float, Optional[Orientation]]:
    """Enumerate all 2^m orientations with networkx; the oracle for tests.

    Returns:
        (minimum diameter, a witness), or (inf, None) when no orientation is
        strongly connected.

    Raises:
        InputError: If g has no vertices.
        CapabilityError: If g has more than BRUTEFORCE_EDGE_LIMIT edges.
    """
    if g.n == 0:
        raise InputError("graph has no vertices")
    if g.m > BRUTEFORCE_EDGE_LIMIT:
        raise CapabilityError(f"brute force is capped at {BRUTEFORCE_EDGE_LIMIT} edges, got {g.m}")
    edges = g.sorted_edges()
    best: float = INF
    witness: Optional[Orientation] = None
    for flips in itertools.product((False, True), repeat=len(edges)):
        arcs = [(b, a) if flip else (a, b) for (a, b), flip in zip(edges, flips)]
        digraph = nx.DiGraph()
        digraph.add_nodes_from(range(g.n))
        digraph.add_edges_from(arcs)
        if not nx.is_strongly_connected(digraph):
            continue
        value = nx.diameter(digraph) if g.n > 1 else 0
        if value < best:
            best, witness = value, Orientation(g, frozenset(arcs))
    return best, witness
