"""Vertex partition and orientation plan models for the diameter-3 construction."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Literal, Optional

from src.models.errors import StructuralError
from src.models.graph import Arc, Edge, UndirectedGraph

CellName = Literal[
    "u", "v", "x", "y",
    "X1", "X2", "X3", "Y1", "Y2", "Y3",
    "Z", "W", "I", "K",
    "J1", "J2", "J3", "J41", "J42",
]

# Global cell rank; also the tie-break order for leftover edges.
CELL_ORDER: tuple[CellName, ...] = (
    "u", "v", "x", "y",
    "X1", "X2", "X3", "Y1", "Y2", "Y3",
    "Z", "W", "I", "K",
    "J1", "J2", "J3", "J41", "J42",
)

SET_CELLS: tuple[CellName, ...] = CELL_ORDER[4:]

# Union labels accepted by rules alongside single cells.
CELL_GROUPS: dict[str, tuple[CellName, ...]] = {
    "X": ("X1", "X2", "X3"),
    "Y": ("Y1", "Y2", "Y3"),
    "J": ("J1", "J2", "J3", "J41", "J42"),
    "J4": ("J41", "J42"),
}

PlanMode = Literal["partition", "fallback-exact", "fallback-heuristic"]


@dataclass(frozen=True)
class Partition3:
    """Labelling of every vertex into the distinguished vertices and 15 sets.

    u, v are the adjacent degree-2 vertices; x is u's other neighbour and y is
    v's other neighbour.
    """

    n: int
    u: int
    v: int
    x: int
    y: int
    cells: dict[str, frozenset[int]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        seen: dict[int, str] = {self.u: "u"}
        for name, vertex in (("v", self.v), ("x", self.x), ("y", self.y)):
            if vertex in seen:
                raise StructuralError(
                    f"distinguished vertex {vertex} is both {seen[vertex]} and {name}", vertex
                )
            seen[vertex] = name
        for name in SET_CELLS:
            for vertex in self.cells.get(name, frozenset()):
                if vertex in seen:
                    raise StructuralError(
                        f"vertex {vertex} is in both {seen[vertex]} and {name}", vertex
                    )
                seen[vertex] = name
        for vertex in range(self.n):
            if vertex not in seen:
                raise StructuralError(f"vertex {vertex} is not assigned to any cell", vertex)

    def cell(self, name: str) -> frozenset[int]:
        """Vertices of a cell, a distinguished vertex, or a union label (X, Y, J, J4)."""
        if name in ("u", "v", "x", "y"):
            return frozenset({getattr(self, name)})
        if name in CELL_GROUPS:
            return frozenset().union(*(self.cells.get(part, frozenset()) for part in CELL_GROUPS[name]))
        return self.cells.get(name, frozenset())

    @cached_property
    def cell_of(self) -> dict[int, CellName]:
        lookup: dict[int, CellName] = {self.u: "u", self.v: "v", self.x: "x", self.y: "y"}
        for name in SET_CELLS:
            for vertex in self.cells.get(name, frozenset()):
                lookup[vertex] = name
        return lookup

    def rank(self, vertex: int) -> int:
        return CELL_ORDER.index(self.cell_of[vertex])

    def sizes(self) -> dict[str, int]:
        return {name: len(self.cells.get(name, frozenset())) for name in SET_CELLS}

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "u": self.u,
            "v": self.v,
            "x": self.x,
            "y": self.y,
            "cell_sizes": self.sizes(),
            "cells": {name: sorted(self.cells.get(name, frozenset())) for name in SET_CELLS},
        }


@dataclass(frozen=True)
class RuleApplication:
    """One edge oriented by one named rule."""

    rule: str
    edge: Edge
    arc: Arc

    def to_dict(self) -> dict[str, Any]:
        return {"rule": self.rule, "edge": list(self.edge), "arc": list(self.arc)}


@dataclass(frozen=True)
class RuleConflict:
    """A later rule matched an edge that an earlier rule already oriented."""

    rule: str
    edge: Edge
    attempted: Arc
    kept: Arc
    kept_by: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "rule": self.rule,
            "edge": list(self.edge),
            "attempted": list(self.attempted),
            "kept": list(self.kept),
            "kept_by": self.kept_by,
        }


@dataclass
class OrientationPlan:
    """Audit trail of how an orientation was produced.

    In partition mode every edge appears exactly once across rules_applied
    and leftover_edges. In fallback modes both lists are empty and
    fallback_reason says why the construction was not used.
    """

    mode: PlanMode
    partition: Optional[Partition3] = None
    rules_applied: list[RuleApplication] = field(default_factory=list)
    leftover_edges: list[Arc] = field(default_factory=list)
    conflicts: list[RuleConflict] = field(default_factory=list)
    fallback_reason: Optional[str] = None
    proven_optimal: Optional[bool] = None

    def oriented_edges(self) -> list[Edge]:
        edges = [application.edge for application in self.rules_applied]
        edges.extend((min(a, b), max(a, b)) for a, b in self.leftover_edges)
        return edges

    def rule_arcs(self) -> dict[Arc, str]:
        return {application.arc: application.rule for application in self.rules_applied}

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "mode": self.mode,
            "fallback_reason": self.fallback_reason,
            "proven_optimal": self.proven_optimal,
            "partition": self.partition.to_dict() if self.partition else None,
            "rules_applied": [a.to_dict() for a in self.rules_applied],
            "leftover_edges": [list(arc) for arc in self.leftover_edges],
            "conflicts": [c.to_dict() for c in self.conflicts],
        }


@dataclass(frozen=True)
class Lemma1Instance:
    """Host graph H with disjoint vertex sets S and S'.

    The instance is valid when S' lies in the neighbourhood of S and H[S']
    has no single-vertex components; orient_lemma1 checks this and raises
    PreconditionError naming the offending vertex.
    """

    host: UndirectedGraph
    s_set: frozenset[int]
    s_prime: frozenset[int]

    def subgraph_edges(self) -> frozenset[Edge]:
        """Edges of F = H[S'] together with E[S', S]."""
        inside = self.s_prime
        return frozenset(
            (a, b)
            for a, b in self.host.edges
            if (a in inside and b in inside)
            or (a in inside and b in self.s_set)
            or (b in inside and a in self.s_set)
        )


@dataclass(frozen=True)
class Lemma1Verdict:
    """Result of verify_lemma1.

    On failure ``vertex`` is the first w in S' (by id) that breaks a bound,
    ``direction`` tells which one: "from_s" is d(S, w), "to_s" is d(w, S).
    """

    holds: bool
    vertex: Optional[int] = None
    direction: Optional[Literal["from_s", "to_s"]] = None
    distance: Optional[float] = None

    def to_dict(self) -> dict[str, Any]:
        distance = self.distance
        return {
            "holds": self.holds,
            "vertex": self.vertex,
            "direction": self.direction,
            "distance": None if distance is None or distance == float("inf") else int(distance),
        }
