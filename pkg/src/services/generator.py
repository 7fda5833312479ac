"""Instance generators used by the gen subcommand and the test suites."""

from typing import Literal, Optional

import numpy as np

from src.models.class_report import ClassParams
from src.models.errors import CapabilityError, InputError
from src.models.graph import Edge, UndirectedGraph, normalize_edge
from src.services.class_checker import find_adjacent_degree2_pair, in_class

GeneratorKind = Literal["cycle", "c5", "planted", "ears"]
GENERATOR_KINDS: tuple[GeneratorKind, ...] = ("cycle", "c5", "planted", "ears")

PLANTED_PARAMS = ClassParams(k=3, lam=4, s=1)
PLANTED_MAX_VERTICES = 40
DEFAULT_MAX_ATTEMPTS = 50

# Gadget vertex ids of planted instances.
U, V, X, Y, Z0 = 0, 1, 2, 3, 4


def cycle_graph(n: int) -> UndirectedGraph:
    """C_n on vertices 0..n-1 in cycle order."""
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    return UndirectedGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def c5_example() -> UndirectedGraph:
    return cycle_graph(5)


class _PlantedBuilder:
    """Grows a graph cell by cell around the u, v, x, y gadget.

    Every non-gadget vertex outside Z is joined to the hub z0 (a Z vertex),
    which keeps the diameter at 3; the second neighbour decides the cell.
    """

    def __init__(self, n: int, rng: np.random.Generator, x_adjacent_y: bool) -> None:
        self.n = n
        self.rng = rng
        self.x_adjacent_y = x_adjacent_y
        self.edges: set[Edge] = {(U, V), (U, X), (V, Y), (X, Z0), (Y, Z0)}
        if x_adjacent_y:
            self.edges.add((X, Y))
        self.cells: dict[str, list[int]] = {name: [] for name in ("X1", "Y1", "Z", "W", "I", "K")}
        self.cells["Z"].append(Z0)
        self.next_id = 5

    def _new(self, cell: Optional[str], *neighbours: int) -> int:
        vertex = self.next_id
        self.next_id += 1
        for other in neighbours:
            self.edges.add(normalize_edge(vertex, other))
        if cell is not None and cell in self.cells:
            self.cells[cell].append(vertex)
        return vertex

    def _pick(self, cell: str) -> int:
        members = self.cells[cell]
        return members[int(self.rng.integers(len(members)))]

    def available(self) -> list[str]:
        room = self.n - self.next_id
        kinds = ["X1", "Y1", "Z"]
        if self.cells["X1"] and self.cells["Y1"]:
            kinds.append("W")
        if self.cells["X1"]:
            kinds.append("I")
        if self.cells["Y1"]:
            kinds.append("K")
        if self.cells["K"]:
            kinds.append("J1")
        if self.cells["I"]:
            kinds.append("J2")
        if self.cells["W"]:
            kinds.append("J3")
        if len(self.cells["Z"]) > 1:
            kinds.append("J41")
        if self.x_adjacent_y and self.cells["X1"]:
            kinds.append("X2")
        if self.x_adjacent_y and self.cells["Y1"]:
            kinds.append("Y2")
        if room >= 2:
            kinds.append("J42")
            if self.x_adjacent_y:
                kinds.extend(["X3", "Y3"])
        return kinds

    def add(self, kind: str) -> None:
        if kind == "X1":
            self._new("X1", X, Z0)
        elif kind == "Y1":
            self._new("Y1", Y, Z0)
        elif kind == "Z":
            self._new("Z", X, Y)
        elif kind == "W":
            self._new("W", self._pick("X1"), self._pick("Y1"), Z0)
        elif kind == "I":
            self._new("I", self._pick("X1"), Z0)
        elif kind == "K":
            self._new("K", self._pick("Y1"), Z0)
        elif kind == "J1":
            self._new(None, self._pick("K"), Z0)
        elif kind == "J2":
            self._new(None, self._pick("I"), Z0)
        elif kind == "J3":
            self._new(None, self._pick("W"), Z0)
        elif kind == "J41":
            other = self._pick("Z")
            while other == Z0:
                other = self._pick("Z")
            self._new(None, Z0, other)
        elif kind == "X2":
            self._new(None, X, self._pick("X1"))
        elif kind == "Y2":
            self._new(None, Y, self._pick("Y1"))
        elif kind == "J42":
            first = self._new(None, Z0)
            self._new(None, Z0, first)
        elif kind == "X3":
            first = self._new(None, X)
            self._new(None, X, first)
        elif kind == "Y3":
            first = self._new(None, Y)
            self._new(None, Y, first)
        else:
            raise InputError(f"unknown planted cell kind {kind!r}")

    def add_extra_edges(self, probability: float) -> None:
        """Sprinkle edges that cannot move any vertex to another cell."""
        core = sorted(self.cells["X1"] + self.cells["Y1"] + self.cells["Z"] + self.cells["W"])
        pools = [core, sorted(self.cells["I"]), sorted(self.cells["K"])]
        for pool in pools:
            for i, a in enumerate(pool):
                for b in pool[i + 1:]:
                    if self.rng.random() < probability:
                        self.edges.add(normalize_edge(a, b))

    def build(self) -> UndirectedGraph:
        return UndirectedGraph.from_edges(self.n, self.edges)


def planted_instance(
    n: int,
    rng: np.random.Generator,
    extra_edge_prob: float = 0.15,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> UndirectedGraph:
    """Random member of G(n, 3, 4, 1) with the degree-2 gadget on 0, 1, 2, 3.

    Vertices 0 and 1 are the adjacent degree-2 pair, 2 and 3 their outer
    neighbours (x and y), and 4 a common neighbour of x and y. The remaining
    vertices are planted into the X1, Y1, Z, W, I, K and J cells (and the X2,
    X3, Y2, Y3 cells when x and y are adjacent). Each draw is checked with
    in_class and redrawn on failure.

    Args:
        n: Vertex count, 5..40.
        rng: numpy Generator driving every random choice.
        extra_edge_prob: Probability of each optional edge inside a cell pool.
        max_attempts: Draws before giving up.

    Returns:
        A class member on which find_adjacent_degree2_pair returns (0, 1, 2, 3).

    Raises:
        InputError: If n is outside 5..40 or the probability is outside [0, 1].
        CapabilityError: If no member was drawn within max_attempts.
    """
    if not 5 <= n <= PLANTED_MAX_VERTICES:
        raise InputError(f"planted instances need 5 <= n <= {PLANTED_MAX_VERTICES}, got {n}")
    if not 0.0 <= extra_edge_prob <= 1.0:
        raise InputError(f"extra edge probability must lie in [0, 1], got {extra_edge_prob}")

    for _ in range(max_attempts):
        builder = _PlantedBuilder(n, rng, x_adjacent_y=bool(rng.random() < 0.5))
        while builder.next_id < n:
            kinds = builder.available()
            builder.add(kinds[int(rng.integers(len(kinds)))])
        builder.add_extra_edges(extra_edge_prob)
        graph = builder.build()
        if find_adjacent_degree2_pair(graph) != (U, V, X, Y):
            continue
        if in_class(graph, PLANTED_PARAMS).member:
            return graph
    raise CapabilityError(f"no class member found in {max_attempts} attempts for n={n}")


def ear_graph(n: int, rng: np.random.Generator, chord_prob: float = 0.1) -> UndirectedGraph:
    """Random connected bridgeless graph built by ear additions.

    Starts from a cycle, then attaches paths of new vertices between
    existing vertices (closed ears allowed when the path has at least two
    new vertices), then adds random chords. Every step keeps the graph
    2-edge-connected.

    Raises:
        InputError: If n < 3.
    """
    if n < 3:
        raise InputError(f"ear graphs need at least 3 vertices, got {n}")
    start = int(rng.integers(3, min(n, 6) + 1))
    edges: set[Edge] = {normalize_edge(i, (i + 1) % start) for i in range(start)}
    placed = start
    while placed < n:
        length = int(rng.integers(1, min(3, n - placed) + 1))
        a = int(rng.integers(placed))
        b = int(rng.integers(placed))
        if length == 1:
            while b == a:
                b = int(rng.integers(placed))
        path = [a] + list(range(placed, placed + length)) + [b]
        for left, right in zip(path, path[1:]):
            edges.add(normalize_edge(left, right))
        placed += length
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < chord_prob:
                edges.add((a, b))
    return UndirectedGraph.from_edges(n, edges)


def generate(kind: GeneratorKind, n: int, rng: np.random.Generator) -> UndirectedGraph:
    """Dispatch to one generator by name."""
    if kind == "cycle":
        return cycle_graph(n)
    if kind == "c5":
        return c5_example()
    if kind == "planted":
        return planted_instance(n, rng)
    if kind == "ears":
        return ear_graph(n, rng)
    raise InputError(f"unknown generator {kind!r}; expected one of {', '.join(GENERATOR_KINDS)}")
