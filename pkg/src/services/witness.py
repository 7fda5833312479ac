"""Hunting for bridgeless small-diameter graphs with large oriented diameter."""

import math
from itertools import chain
from typing import Any, Callable, Iterable, Iterator, Optional

import networkx as nx
import numpy as np

from src.models.errors import InputError
from src.models.graph import UndirectedGraph
from src.models.search import SearchConfig, WitnessRecord, WitnessSearchResult
from src.services.bitsets import diameter_of_masks, masks_of
from src.services.bridges import first_bridge
from src.services.exact_search import oriented_diameter_exact

ATLAS_VERTEX_LIMIT = 7
FILE_EXHAUSTIVE_LIMIT = 9
DEFAULT_SAMPLES_PER_SIZE = 200
CANDIDATE_DIAMETER = 3

# Exact values and the best published ranges for small d.
KNOWN_VALUES: dict[int, tuple[int, int]] = {1: (3, 3), 2: (6, 6), 3: (9, 11)}


def general_orientation_bounds(d: int) -> dict[str, Any]:
    """Bounds on f(d), the worst oriented diameter of bridgeless diameter-d graphs.

    The general range is ceil(d^2/2 + d) <= f(d) <= 2d^2 + 2d; where a
    sharper range is known it is reported alongside.

    Raises:
        InputError: If d < 1.
    """
    if d < 1:
        raise InputError(f"d must be positive, got {d}")
    bounds: dict[str, Any] = {
        "d": d,
        "general_lower": math.ceil(d * d / 2 + d),
        "general_upper": 2 * d * d + 2 * d,
    }
    known = KNOWN_VALUES.get(d)
    bounds["known_lower"] = known[0] if known else None
    bounds["known_upper"] = known[1] if known else None
    return bounds


def _is_candidate(g: UndirectedGraph) -> bool:
    """Connected, bridgeless and diameter at most 3."""
    if g.n < 2:
        return False
    if diameter_of_masks(masks_of(g), cutoff=CANDIDATE_DIAMETER) > CANDIDATE_DIAMETER:
        return False
    return first_bridge(g) is None


def _atlas_graphs(n_max: int) -> Iterator[UndirectedGraph]:
    for atlas_graph in nx.graph_atlas_g():
        nodes = atlas_graph.number_of_nodes()
        if 1 <= nodes <= n_max:
            yield UndirectedGraph.from_networkx(atlas_graph)


def _sampled_graphs(n_lo: int, n_max: int, samples: int, seed: Optional[int]) -> Iterator[UndirectedGraph]:
    rng = np.random.default_rng(seed if seed is not None else 0)
    for n in range(n_lo, n_max + 1):
        for _ in range(samples):
            p = float(rng.uniform(0.25, 0.6))
            sampled = nx.gnp_random_graph(n, p, seed=int(rng.integers(2**31)))
            yield UndirectedGraph.from_networkx(sampled)


def search_witness(
    n_max: int,
    diameter_target: int,
    cfg: Optional[SearchConfig] = None,
    samples: int = DEFAULT_SAMPLES_PER_SIZE,
    on_graph: Optional[Callable[[], None]] = None,
    graphs: Optional[Iterable[UndirectedGraph]] = None,
) -> WitnessSearchResult:
    """Find bridgeless graphs of diameter <= 3 whose oriented diameter reaches a target.

    All graphs on up to 7 vertices come from the isomorph-free atlas, so that
    range is exhaustive. Sizes 8..n_max are sampled from G(n, p) with a
    seeded generator, which clears the exhaustive flag; candidates with more
    edges than the edge cap are skipped.

    When graphs is given (e.g. the complete geng list read with load_graph6)
    it replaces both sources; graphs above n_max are ignored and the run is
    taken as exhaustive for n_max <= 9.

    Each candidate runs the exact search with an early exit at
    diameter_target - 1: finding such an orientation rules the graph out.

    Args:
        n_max: Largest vertex count.
        diameter_target: Oriented diameter a witness must reach.
        cfg: Search configuration (seed, node budget, workers, edge cap).
        samples: Random graphs drawn per vertex count above the atlas range.
        on_graph: Optional callback invoked once per examined graph.
        graphs: Explicit graph list replacing the atlas and sampling.

    Returns:
        WitnessSearchResult with witnesses sorted by (n, edges).

    Raises:
        InputError: If n_max < 1, diameter_target < 1 or samples < 0.
    """
    cfg = cfg or SearchConfig()
    if n_max < 1:
        raise InputError(f"n_max must be positive, got {n_max}")
    if diameter_target < 1:
        raise InputError(f"target must be positive, got {diameter_target}")
    if samples < 0:
        raise InputError(f"samples must be non-negative, got {samples}")

    result = WitnessSearchResult(
        n_max=n_max,
        target=diameter_target,
        exhaustive=n_max <= (FILE_EXHAUSTIVE_LIMIT if graphs is not None else ATLAS_VERTEX_LIMIT),
        bounds=general_orientation_bounds(CANDIDATE_DIAMETER),
    )
    screening = SearchConfig(
        edge_cap=cfg.edge_cap,
        node_budget=cfg.node_budget,
        target=diameter_target - 1,
        workers=cfg.workers,
        seed=cfg.seed,
        max_rounds=cfg.max_rounds,
    )

    stream: Iterator[UndirectedGraph]
    if graphs is not None:
        stream = (graph for graph in graphs if graph.n <= n_max)
    else:
        stream = _atlas_graphs(min(n_max, ATLAS_VERTEX_LIMIT))
    if graphs is None and n_max > ATLAS_VERTEX_LIMIT:
        stream = chain(stream, _sampled_graphs(ATLAS_VERTEX_LIMIT + 1, n_max, samples, cfg.seed))

    for graph in stream:
        result.graphs_examined += 1
        if on_graph:
            on_graph()
        if not _is_candidate(graph):
            continue
        if graph.m > cfg.edge_cap:
            # skipped candidates void the exhaustive claim
            result.exhaustive = False
            continue
        result.candidates += 1
        outcome = oriented_diameter_exact(graph, screening)
        if outcome.budget_exhausted:
            result.budget_exhausted = True
        if outcome.diameter >= diameter_target:
            result.witnesses.append(
                WitnessRecord(
                    graph=graph,
                    oriented_diameter=int(outcome.diameter),
                    proven_optimal=outcome.proven_optimal,
                )
            )

    result.witnesses.sort(key=lambda w: (w.graph.n, w.graph.sorted_edges()))
    return result
