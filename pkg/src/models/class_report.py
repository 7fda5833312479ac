"""Class-membership models for G(n, k, lambda, s)."""

import math
from dataclasses import dataclass
from typing import Any, Optional

from src.models.errors import InputError
from src.models.graph import Edge, UndirectedGraph


@dataclass(frozen=True)
class ClassParams:
    """Parameters (k, lambda, s) of the class G(n, k, lambda, s).

    k bounds the diameter, lam bounds the diameter after deleting any s or
    fewer edges. ``lambda`` is a keyword, hence ``lam``.
    """

    k: int
    lam: int
    s: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise InputError(f"k must be a positive integer, got {self.k}")
        if self.lam <= self.k:
            raise InputError(f"lambda must exceed k, got lambda={self.lam}, k={self.k}")
        if self.s < 0:
            raise InputError(f"s must be non-negative, got {self.s}")

    def to_dict(self) -> dict[str, Any]:
        return {"k": self.k, "lambda": self.lam, "s": self.s}


@dataclass
class ClassReport:
    """Membership verdict with a checkable witness on failure.

    - violating_pair: (a, b) with d_G(a, b) > k (distance inf when disconnected)
    - violating_deletion: edge subset F, |F| <= s, with diam(G - F) > lambda
    """

    params: ClassParams
    member: bool
    violating_deletion: Optional[tuple[Edge, ...]] = None
    violating_pair: Optional[tuple[int, int]] = None
    witness_distance: Optional[float] = None
    min_edge_count: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.member and (self.violating_deletion is None) == (self.violating_pair is None):
            raise InputError("a failed membership report needs exactly one witness")

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        distance = self.witness_distance
        return {
            "params": self.params.to_dict(),
            "member": self.member,
            "violating_deletion": (
                [list(edge) for edge in self.violating_deletion]
                if self.violating_deletion is not None
                else None
            ),
            "violating_pair": list(self.violating_pair) if self.violating_pair else None,
            "witness_distance": (
                None if distance is None or math.isinf(distance) else int(distance)
            ),
            "witness_unreachable": distance is not None and math.isinf(distance),
            "min_edge_count": self.min_edge_count,
        }


@dataclass
class MinEdgesResult:
    """Outcome of the M(n, k, lambda, s) search.

    proven=False means min_edges is only a lower bound: every size below it
    was refuted, but the budget ran out before a member was found.
    """

    n: int
    params: ClassParams
    min_edges: Optional[int]
    proven: bool
    witness: Optional[UndirectedGraph] = None
    graphs_examined: int = 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "params": self.params.to_dict(),
            "min_edges": self.min_edges,
            "proven": self.proven,
            "lower_bound_only": not self.proven,
            "witness_edges": (
                [list(edge) for edge in self.witness.sorted_edges()] if self.witness else None
            ),
            "graphs_examined": self.graphs_examined,
        }
