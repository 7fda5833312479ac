"""Data models for graphs, orientations, partitions and reports."""

from src.models.class_report import ClassParams, ClassReport, MinEdgesResult
from src.models.errors import (
    BridgeError,
    CapabilityError,
    GraphFormatError,
    InputError,
    OrientationError,
    PreconditionError,
    StructuralError,
)
from src.models.graph import (
    INF,
    DiameterCertificate,
    Orientation,
    UndirectedGraph,
    normalize_edge,
)
from src.models.observation_issue import ObservationIssue, ObservationReport
from src.models.partition import (
    CELL_ORDER,
    Lemma1Instance,
    Lemma1Verdict,
    OrientationPlan,
    Partition3,
    RuleApplication,
    RuleConflict,
)
from src.models.report import GuaranteeStatus, InputSummary, RunReport
from src.models.search import ExactResult, SearchConfig, WitnessRecord, WitnessSearchResult

__all__ = [
    "INF",
    "UndirectedGraph",
    "Orientation",
    "DiameterCertificate",
    "normalize_edge",
    "ClassParams",
    "ClassReport",
    "MinEdgesResult",
    "Partition3",
    "OrientationPlan",
    "RuleApplication",
    "RuleConflict",
    "Lemma1Instance",
    "Lemma1Verdict",
    "CELL_ORDER",
    "ObservationIssue",
    "ObservationReport",
    "SearchConfig",
    "ExactResult",
    "WitnessRecord",
    "WitnessSearchResult",
    "InputSummary",
    "GuaranteeStatus",
    "RunReport",
    "OrientationError",
    "InputError",
    "GraphFormatError",
    "BridgeError",
    "PreconditionError",
    "CapabilityError",
    "StructuralError",
]
