"""Report data models for JSON output generation."""

from dataclasses import dataclass, field
from typing import Any, Optional

from src.models.partition import PlanMode

SCHEMA_VERSION = 1

# Diameter bound the partition construction guarantees for class members.
THEOREM_BOUND = 9


@dataclass
class InputSummary:
    """Basic facts about the input graph."""

    n: int
    m: int
    min_degree: Optional[int]
    diameter: Optional[int]
    connected: bool
    bridgeless: bool

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "n": self.n,
            "m": self.m,
            "min_degree": self.min_degree,
            "diameter": self.diameter,
            "connected": self.connected,
            "bridgeless": self.bridgeless,
        }


@dataclass
class GuaranteeStatus:
    """Whether the diameter-9 guarantee applies to this run.

    It applies when the partition construction was used and the input is a
    member of G(n, 3, 4, 1). Minimality is not checked.
    """

    applies: bool
    bound: int = THEOREM_BOUND
    member: Optional[bool] = None
    holds: Optional[bool] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "applies": self.applies,
            "bound": self.bound,
            "member": self.member,
            "holds": self.holds,
        }


@dataclass
class RunReport:
    """Top-level report written by every subcommand.

    Keys are emitted in a fixed order. Sections left as None are omitted, and
    timings appear only when requested so default reports are byte-identical
    across runs.
    """

    command: str
    input: Optional[InputSummary] = None
    mode: Optional[PlanMode] = None
    guarantee: Optional[GuaranteeStatus] = None
    cell_sizes: Optional[dict[str, int]] = None
    oriented_diameter: Optional[int] = None
    strongly_connected: Optional[bool] = None
    proven_optimal: Optional[bool] = None
    certificate_digest: Optional[str] = None
    rule_counts: Optional[dict[str, int]] = None
    details: dict[str, Any] = field(default_factory=dict)
    timings: Optional[dict[str, float]] = None

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        report: dict[str, Any] = {"schema_version": SCHEMA_VERSION, "command": self.command}
        if self.input is not None:
            report["input"] = self.input.to_dict()
        if self.mode is not None:
            report["mode"] = self.mode
        if self.guarantee is not None:
            report["guarantee"] = self.guarantee.to_dict()
        if self.cell_sizes is not None:
            report["cell_sizes"] = self.cell_sizes
        if self.oriented_diameter is not None or self.strongly_connected is not None:
            report["oriented_diameter"] = self.oriented_diameter
        if self.strongly_connected is not None:
            report["strongly_connected"] = self.strongly_connected
        if self.proven_optimal is not None:
            report["proven_optimal"] = self.proven_optimal
        if self.certificate_digest is not None:
            report["certificate_digest"] = self.certificate_digest
        if self.rule_counts is not None:
            report["rule_counts"] = self.rule_counts
        report.update(self.details)
        if self.timings is not None:
            report["timings"] = {name: round(seconds, 6) for name, seconds in self.timings.items()}
        return report
