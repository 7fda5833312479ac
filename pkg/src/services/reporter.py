"""Reporter service: arc-list emission and run reports in JSON or text."""

import json
import math
from pathlib import Path
from typing import Any, Optional

import pandas as pd

from src.models.class_report import ClassReport, MinEdgesResult
from src.models.graph import DiameterCertificate, Orientation, UndirectedGraph
from src.models.observation_issue import ObservationReport
from src.models.partition import OrientationPlan
from src.models.report import GuaranteeStatus, InputSummary, RunReport
from src.models.search import ExactResult, WitnessSearchResult
from src.services.bridges import first_bridge
from src.services.distances import diameter, is_connected, min_degree


def emit_orientation(o: Orientation) -> str:
    """Header 'n m' followed by one 'a b' line per arc a -> b, arcs sorted.

    No trailing newline; parse_orientation(emit_orientation(o)) == o.
    """
    lines = [f"{o.n} {len(o.arcs)}"]
    lines.extend(f"{a} {b}" for a, b in o.sorted_arcs())
    return "\n".join(lines)


def emit_graph(g: UndirectedGraph) -> str:
    """Canonical edge-list text of g (edges sorted, a < b)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{a} {b}" for a, b in g.sorted_edges())
    return "\n".join(lines)


def summarize_input(g: UndirectedGraph) -> InputSummary:
    """Basic facts about an input graph; undefined values are None."""
    if g.n == 0:
        return InputSummary(n=0, m=0, min_degree=None, diameter=None, connected=False, bridgeless=True)
    return InputSummary(
        n=g.n,
        m=g.m,
        min_degree=min_degree(g),
        diameter=diameter(g).finite_diameter(),
        connected=is_connected(g),
        bridgeless=first_bridge(g) is None,
    )


def rule_counts(plan: OrientationPlan) -> dict[str, int]:
    """Edges oriented per rule, plus ``leftover`` for the arbitrary rule."""
    counts: dict[str, int] = {}
    if plan.rules_applied:
        audit = pd.DataFrame([application.to_dict() for application in plan.rules_applied])
        sizes = audit.groupby("rule", sort=True).size()
        counts = {str(rule): int(size) for rule, size in sizes.items()}
    counts["leftover"] = len(plan.leftover_edges)
    return counts


def _certificate_fields(o: Orientation, cert: DiameterCertificate) -> dict[str, Any]:
    return {
        "oriented_diameter": cert.finite_diameter(),
        "strongly_connected": cert.strongly_connected,
        "certificate_digest": cert.digest(o.arcs),
    }


def build_orient_report(
    g: UndirectedGraph,
    o: Orientation,
    plan: OrientationPlan,
    cert: DiameterCertificate,
    guarantee: GuaranteeStatus,
    observations: Optional[ObservationReport] = None,
    timings: Optional[dict[str, float]] = None,
) -> RunReport:
    """Report for the orient subcommand.

    Cell sizes, rule counts and observations appear only in partition mode;
    fallback runs carry the fallback reason instead.
    """
    details: dict[str, Any] = {}
    if plan.partition is not None:
        details["gadget"] = {
            "u": plan.partition.u,
            "v": plan.partition.v,
            "x": plan.partition.x,
            "y": plan.partition.y,
        }
        details["conflicts"] = [c.to_dict() for c in plan.conflicts]
    if plan.fallback_reason is not None:
        details["fallback_reason"] = plan.fallback_reason
    if observations is not None:
        details["observations"] = observations.to_dict()
    return RunReport(
        command="orient",
        input=summarize_input(g),
        mode=plan.mode,
        guarantee=guarantee,
        cell_sizes=plan.partition.sizes() if plan.partition is not None else None,
        proven_optimal=plan.proven_optimal,
        rule_counts=rule_counts(plan) if plan.mode == "partition" else None,
        details=details,
        timings=timings,
        **_certificate_fields(o, cert),
    )


def build_diameter_report(
    g: UndirectedGraph,
    cert: DiameterCertificate,
    o: Optional[Orientation] = None,
    timings: Optional[dict[str, float]] = None,
) -> RunReport:
    """Report for the diameter subcommand (undirected, or oriented when o is given)."""
    if o is not None:
        return RunReport(
            command="diameter",
            input=summarize_input(g),
            timings=timings,
            **_certificate_fields(o, cert),
        )
    return RunReport(
        command="diameter",
        input=summarize_input(g),
        details={"diameter": cert.finite_diameter(), "connected": cert.strongly_connected},
        timings=timings,
    )


def build_exact_report(
    g: UndirectedGraph,
    result: ExactResult,
    cert: DiameterCertificate,
    timings: Optional[dict[str, float]] = None,
) -> RunReport:
    return RunReport(
        command="exact",
        input=summarize_input(g),
        proven_optimal=result.proven_optimal,
        details={"nodes": result.nodes, "budget_exhausted": result.budget_exhausted},
        timings=timings,
        **_certificate_fields(result.orientation, cert),
    )


def build_verify_report(
    g: UndirectedGraph,
    o: Orientation,
    cert: DiameterCertificate,
    timings: Optional[dict[str, float]] = None,
) -> RunReport:
    """Report for verify: the full certificate travels in ``certificate``."""
    return RunReport(
        command="verify",
        input=summarize_input(g),
        details={"certificate": cert.to_dict()},
        timings=timings,
        **_certificate_fields(o, cert),
    )


def build_class_report(
    g: UndirectedGraph,
    report: ClassReport,
    sanity: dict[str, bool],
    timings: Optional[dict[str, float]] = None,
) -> RunReport:
    details = report.to_dict()
    details["sanity"] = sanity
    return RunReport(command="check-class", input=summarize_input(g), details=details, timings=timings)


def build_witness_report(result: WitnessSearchResult, timings: Optional[dict[str, float]] = None) -> RunReport:
    return RunReport(command="witness-search", details=result.to_dict(), timings=timings)


def build_min_edges_report(result: MinEdgesResult, timings: Optional[dict[str, float]] = None) -> RunReport:
    return RunReport(command="min-edges", details=result.to_dict(), timings=timings)


def build_gen_report(
    kind: str,
    n: int,
    seed: Optional[int],
    graphs: list[UndirectedGraph],
    files: list[str],
    timings: Optional[dict[str, float]] = None,
) -> RunReport:
    details: dict[str, Any] = {
        "kind": kind,
        "n": n,
        "seed": seed,
        "count": len(graphs),
        "graphs": [{"n": graph.n, "m": graph.m} for graph in graphs],
        "files": files,
    }
    return RunReport(command="gen", details=details, timings=timings)


def _fmt(value: Any) -> str:
    if value is None:
        return "inf"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return str(value)


def render_text(report: RunReport) -> str:
    """Short human-readable rendering; the first line is the headline."""
    data = report.to_dict()
    command = report.command
    lines: list[str] = []
    if command in ("orient", "verify") or (command == "diameter" and "oriented_diameter" in data):
        lines.append(f"diameter {_fmt(data['oriented_diameter'])}")
    elif command == "diameter":
        lines.append(f"diameter {_fmt(data['diameter'])}")
    elif command == "exact":
        lines.append(f"oriented diameter {_fmt(data['oriented_diameter'])}")
    elif command == "check-class":
        lines.append(f"member {_fmt(data['member'])}")
        if data["min_edge_count"] is not None:
            lines.append(f"min edges {data['min_edge_count']}")
    elif command == "witness-search":
        lines.append(f"witnesses {len(data['witnesses'])}")
        lines.append(f"proven exhaustive {_fmt(data['proven_exhaustive'])}")
    elif command == "min-edges":
        minimum = data["min_edges"]
        lines.append(f"min edges {minimum if minimum is not None else 'none'}")
        lines.append(f"proven {_fmt(data['proven'])}")
    elif command == "gen":
        lines.append(f"generated {data['count']} graph(s)")

    if report.input is not None:
        summary = report.input
        lines.append(f"input n={summary.n} m={summary.m} bridgeless={_fmt(summary.bridgeless)}")
    if report.mode is not None:
        lines.append(f"mode {report.mode}")
    if "fallback_reason" in data:
        lines.append(f"fallback reason: {data['fallback_reason']}")
    if report.strongly_connected is not None:
        lines.append(f"strongly connected {_fmt(report.strongly_connected)}")
    if report.proven_optimal is not None:
        lines.append(f"proven optimal {_fmt(report.proven_optimal)}")
    if report.guarantee is not None and report.guarantee.applies:
        lines.append(f"guarantee <= {report.guarantee.bound} holds {_fmt(report.guarantee.holds)}")
    if "observations" in data:
        lines.append(f"observations passed {_fmt(data['observations']['passed'])}")
    if report.certificate_digest is not None:
        lines.append(f"digest {report.certificate_digest}")
    if report.timings:
        for step, seconds in report.timings.items():
            lines.append(f"time {step} {seconds:.6f}s")
    return "\n".join(lines) + "\n"


def dumps_json(report: RunReport) -> str:
    """JSON text in the report's fixed key order, with a trailing newline."""
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"


def render(report: RunReport, fmt: str) -> str:
    return render_text(report) if fmt == "text" else dumps_json(report)


def write_text(text: str, output_path: Path) -> None:
    """Write text to a file, creating parent directories as needed."""
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, "w", encoding="utf-8") as f:
        f.write(text)


def write_json(report: RunReport, output_path: Path) -> None:
    """Write a run report as JSON.

    Keys keep the report's fixed order rather than being sorted, so the
    schema reads top-down. Parent directories are created if missing.
    """
    write_text(dumps_json(report), output_path)
