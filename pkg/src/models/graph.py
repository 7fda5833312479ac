"""Undirected graph, orientation and distance certificate models."""

import hashlib
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterable, Iterator, Union

import networkx as nx
import numpy as np

from src.models.errors import InputError

Edge = tuple[int, int]
Arc = tuple[int, int]

# Sentinel for unreachable pairs. Never replaced by a large finite number.
INF = math.inf


def normalize_edge(a: int, b: int) -> Edge:
    """Return the canonical (smaller, larger) form of an unordered pair."""
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class UndirectedGraph:
    """Simple finite graph on vertices 0..n-1.

    Edges are stored as canonical pairs (a, b) with a < b. Any iterable of
    pairs is accepted and normalised; self-loops and out-of-range endpoints
    raise InputError.
    """

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        normalized: set[Edge] = set()
        for a, b in self.edges:
            a, b = int(a), int(b)
            if a == b:
                raise InputError(f"self-loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise InputError(f"edge ({a},{b}) out of range for n={self.n}")
            normalized.add(normalize_edge(a, b))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "UndirectedGraph":
        return cls(n, frozenset(edges))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "UndirectedGraph":
        """Build from a networkx graph whose nodes are 0..n-1."""
        n = graph.number_of_nodes()
        if set(graph.nodes()) != set(range(n)):
            raise InputError("networkx graph nodes must be 0..n-1")
        return cls(n, frozenset(graph.edges()))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets indexed by vertex id."""
        neighbours: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.edges:
            neighbours[a].add(b)
            neighbours[b].add(a)
        return tuple(frozenset(s) for s in neighbours)

    def neighbors(self, vertex: int) -> frozenset[int]:
        return self.adjacency[vertex]

    def degree(self, vertex: int) -> int:
        return len(self.adjacency[vertex])

    def has_edge(self, a: int, b: int) -> bool:
        return a != b and normalize_edge(a, b) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def without_edges(self, removed: Iterable[Edge]) -> "UndirectedGraph":
        """Return g - F."""
        drop = {normalize_edge(a, b) for a, b in removed}
        return UndirectedGraph(self.n, self.edges - drop)

    def is_spanning_subgraph_of(self, other: "UndirectedGraph") -> bool:
        return self.n == other.n and self.edges <= other.edges

    @cached_property
    def nx_graph(self) -> nx.Graph:
        """Frozen networkx view, built once and shared by read-only callers."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.sorted_edges())
        return nx.freeze(graph)

    def to_networkx(self) -> nx.Graph:
        """Return a fresh, mutable networkx copy of this graph."""
        return nx.Graph(self.nx_graph)


@dataclass(frozen=True)
class Orientation:
    """Assignment of exactly one direction to every edge of ``base``.

    ``arcs`` holds (a, b) meaning a -> b.
    """

    base: UndirectedGraph
    arcs: frozenset[Arc] = frozenset()

    def __post_init__(self) -> None:
        arcs = frozenset((int(a), int(b)) for a, b in self.arcs)
        covered: set[Edge] = set()
        for a, b in arcs:
            edge = normalize_edge(a, b)
            if edge not in self.base.edges:
                raise InputError(f"arc {a}->{b} is not an edge of the base graph")
            if edge in covered:
                raise InputError(f"edge {{{edge[0]},{edge[1]}}} is directed twice")
            covered.add(edge)
        if len(covered) != self.base.m:
            missing = sorted(self.base.edges - covered)[0]
            raise InputError(f"edge {{{missing[0]},{missing[1]}}} has no direction")
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Arc]) -> "Orientation":
        """Build an orientation together with its underlying graph."""
        arc_list = [(int(a), int(b)) for a, b in arcs]
        base = UndirectedGraph(n, frozenset(normalize_edge(a, b) for a, b in arc_list))
        if base.m != len(arc_list):
            raise InputError("arc list contains both directions of an edge or a repeated arc")
        return cls(base, frozenset(arc_list))

    @property
    def n(self) -> int:
        return self.base.n

    @cached_property
    def successors(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.arcs:
            out[a].add(b)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def predecessors(self) -> tuple[frozenset[int], ...]:
        into: list[set[int]] = [set() for _ in range(self.n)]
        for a, b in self.arcs:
            into[b].add(a)
        return tuple(frozenset(s) for s in into)

    def direction(self, a: int, b: int) -> Arc:
        """Return the arc chosen for edge {a, b}."""
        if (a, b) in self.arcs:
            return (a, b)
        if (b, a) in self.arcs:
            return (b, a)
        raise InputError(f"{{{a},{b}}} is not an edge of the base graph")

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def reversed(self) -> "Orientation":
        return Orientation(self.base, frozenset((b, a) for a, b in self.arcs))

    def with_reversed_arc(self, arc: Arc) -> "Orientation":
        if arc not in self.arcs:
            raise InputError(f"arc {arc[0]}->{arc[1]} is not in the orientation")
        return Orientation(self.base, (self.arcs - {arc}) | {(arc[1], arc[0])})

    @cached_property
    def nx_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.sorted_arcs())
        return nx.freeze(graph)

    def to_networkx(self) -> nx.DiGraph:
        return nx.DiGraph(self.nx_graph)


GraphLike = Union[UndirectedGraph, Orientation]


@dataclass(frozen=True, eq=False)
class DiameterCertificate:
    """All-pairs distance matrix of a graph or orientation.

    ``dist[i, j]`` is the (directed) distance from i to j, ``np.inf`` when j
    is unreachable from i.
    """

    dist: np.ndarray
    diameter: float
    strongly_connected: bool

    @property
    def n(self) -> int:
        return int(self.dist.shape[0])

    def finite_diameter(self) -> int | None:
        return None if math.isinf(self.diameter) else int(self.diameter)

    def iter_rows(self) -> Iterator[list[int | None]]:
        for row in self.dist:
            yield [None if math.isinf(value) else int(value) for value in row]

    def digest(self, arcs: Iterable[Arc] = ()) -> str:
        """SHA-256 over the canonical arc list and the distance matrix."""
        hasher = hashlib.sha256()
        for a, b in sorted(arcs):
            hasher.update(f"{a} {b}\n".encode())
        for row in self.iter_rows():
            hasher.update((" ".join("inf" if d is None else str(d) for d in row) + "\n").encode())
        return hasher.hexdigest()

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "diameter": self.finite_diameter(),
            "strongly_connected": self.strongly_connected,
            "dist": list(self.iter_rows()),
        }
