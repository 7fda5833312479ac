"""Search configuration and result models for the exact oracle."""

from dataclasses import dataclass, field
from typing import Any, Optional

from src.models.errors import InputError
from src.models.graph import Orientation, UndirectedGraph

# 2^30 orientations is the hard ceiling for exhaustive mode.
EXHAUSTIVE_EDGE_LIMIT = 30
DEFAULT_NODE_BUDGET = 200_000


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for branch-and-bound, local search and witness hunting.

    target: stop as soon as an orientation with diameter <= target is found.
    seed: shuffles the scan order of improve_orientation and seeds sampling.
    max_rounds: cap on improvement passes of the local search.
    """

    edge_cap: int = EXHAUSTIVE_EDGE_LIMIT
    node_budget: int = DEFAULT_NODE_BUDGET
    target: Optional[int] = None
    workers: int = 1
    seed: Optional[int] = None
    max_rounds: int = 200

    def __post_init__(self) -> None:
        if not 0 <= self.edge_cap <= EXHAUSTIVE_EDGE_LIMIT:
            raise InputError(f"edge_cap must be within 0..{EXHAUSTIVE_EDGE_LIMIT}, got {self.edge_cap}")
        if self.node_budget < 1:
            raise InputError(f"node_budget must be positive, got {self.node_budget}")
        if self.workers < 1:
            raise InputError(f"workers must be positive, got {self.workers}")
        if self.max_rounds < 1:
            raise InputError(f"max_rounds must be positive, got {self.max_rounds}")


@dataclass
class ExactResult:
    """Best orientation found by the exact search.

    proven_optimal is False when the node budget ran out or the search
    stopped early at ``target`` above the undirected lower bound.
    """

    diameter: float
    orientation: Orientation
    proven_optimal: bool
    nodes: int
    budget_exhausted: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "oriented_diameter": int(self.diameter),
            "proven_optimal": self.proven_optimal,
            "nodes": self.nodes,
            "budget_exhausted": self.budget_exhausted,
            "arcs": [list(arc) for arc in self.orientation.sorted_arcs()],
        }


@dataclass
class WitnessRecord:
    """A graph whose oriented diameter reached the target."""

    graph: UndirectedGraph
    oriented_diameter: int
    proven_optimal: bool

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.graph.n,
            "edges": [list(edge) for edge in self.graph.sorted_edges()],
            "oriented_diameter": self.oriented_diameter,
            "proven_optimal": self.proven_optimal,
        }


@dataclass
class WitnessSearchResult:
    """Outcome of hunting for bridgeless diameter-<=3 graphs with large oriented diameter."""

    n_max: int
    target: int
    witnesses: list[WitnessRecord] = field(default_factory=list)
    graphs_examined: int = 0
    candidates: int = 0
    exhaustive: bool = True
    budget_exhausted: bool = False
    bounds: dict[str, Any] = field(default_factory=dict)

    @property
    def proven_exhaustive(self) -> bool:
        return self.exhaustive and not self.budget_exhausted

    def to_dict(self) -> dict[str, Any]:
        return {
            "n_max": self.n_max,
            "target": self.target,
            "graphs_examined": self.graphs_examined,
            "candidates": self.candidates,
            "exhaustive": self.exhaustive,
            "budget_exhausted": self.budget_exhausted,
            "proven_exhaustive": self.proven_exhaustive,
            "bounds": self.bounds,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }
