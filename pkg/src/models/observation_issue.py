"""Consistency findings reported by check_observations."""

from dataclasses import dataclass, field
from typing import Any, Literal, Optional

IssueType = Literal[
    "x2_without_x1_neighbor",
    "y2_without_y1_neighbor",
    "x1_far_from_y",
    "y1_far_from_x",
    "x_side_far_from_y",
    "y_side_far_from_x",
    "case2_nonempty",
    "j41_degree_rule",
    "lemma1_bound",
    "not_strongly_connected",
]

Severity = Literal["error", "warning"]


@dataclass
class ObservationIssue:
    """A failed structural assertion about a partition and its orientation.

    Issue types:
    - x2_without_x1_neighbor / y2_without_y1_neighbor (error): X2 (Y2) vertex
      with no neighbour in X1 (Y1)
    - x1_far_from_y (error): directed distance y -> s exceeds 3 for s in X1
    - y1_far_from_x (error): directed distance s -> x exceeds 3 for s in Y1
    - x_side_far_from_y / y_side_far_from_x (error): with Z nonempty, the
      bound 4 fails for X2 u X3 (resp. Y2 u Y3)
    - case2_nonempty (error): Z is empty but I, J or K is not
    - j41_degree_rule (error): J41 vertex without exactly one arc into Z
    - lemma1_bound (error): a Lemma-1 set distance exceeds 2
    - not_strongly_connected (warning): orientation is not strongly connected
    """

    issue_type: IssueType
    severity: Severity
    description: str
    vertex: Optional[int] = None
    distance: Optional[float] = None
    bound: Optional[int] = None

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        distance = self.distance
        return {
            "issue_type": self.issue_type,
            "severity": self.severity,
            "vertex": self.vertex,
            "distance": None if distance is None or distance == float("inf") else int(distance),
            "bound": self.bound,
            "description": self.description,
        }


@dataclass
class ObservationReport:
    """All findings of check_observations; passed means no error-level issue."""

    issues: list[ObservationIssue] = field(default_factory=list)
    checks_run: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(issue.severity == "error" for issue in self.issues)

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "checks_run": list(self.checks_run),
            "issues": [issue.to_dict() for issue in self.issues],
        }
