"""Structural consistency checks on a partition and its orientation."""

import numpy as np

from src.models.errors import InputError
from src.models.graph import INF, Orientation, UndirectedGraph
from src.models.observation_issue import IssueType, ObservationIssue, ObservationReport
from src.models.partition import Lemma1Instance, Partition3
from src.services.distances import bfs_distances, is_strongly_connected
from src.services.lemma1 import verify_lemma1

NEAR_BOUND = 3
FAR_BOUND = 4


def _check_side_neighbors(g: UndirectedGraph, p: Partition3) -> list[ObservationIssue]:
    issues: list[ObservationIssue] = []
    side_checks: tuple[tuple[str, str, IssueType], ...] = (
        ("X2", "X1", "x2_without_x1_neighbor"),
        ("Y2", "Y1", "y2_without_y1_neighbor"),
    )
    for cell, target, issue_type in side_checks:
        anchors = p.cell(target)
        for s in sorted(p.cell(cell)):
            if not g.neighbors(s) & anchors:
                issues.append(
                    ObservationIssue(
                        issue_type=issue_type,
                        severity="error",
                        vertex=s,
                        description=f"{cell} vertex {s} has no neighbour in {target}",
                    )
                )
    return issues


def _check_reach(
    cells: tuple[str, ...],
    p: Partition3,
    dist: np.ndarray,
    bound: int,
    issue_type: IssueType,
    wording: str,
) -> list[ObservationIssue]:
    issues: list[ObservationIssue] = []
    for cell in cells:
        for s in sorted(p.cell(cell)):
            if dist[s] > bound:
                issues.append(
                    ObservationIssue(
                        issue_type=issue_type,
                        severity="error",
                        vertex=s,
                        distance=float(dist[s]),
                        bound=bound,
                        description=wording.format(s=s, cell=cell, bound=bound),
                    )
                )
    return issues


def _check_case2(p: Partition3) -> list[ObservationIssue]:
    if p.cell("Z"):
        return []
    stray = sorted(p.cell("I") | p.cell("J") | p.cell("K"))
    if not stray:
        return []
    return [
        ObservationIssue(
            issue_type="case2_nonempty",
            severity="error",
            vertex=stray[0],
            description=f"Z is empty but vertex {stray[0]} lies in I, J or K",
        )
    ]


def _check_j41_degrees(g: UndirectedGraph, p: Partition3, o: Orientation) -> list[ObservationIssue]:
    issues: list[ObservationIssue] = []
    z_set = p.cell("Z")
    for s in sorted(p.cell("J41")):
        out_to_z = len(o.successors[s] & z_set)
        in_from_z = len(o.predecessors[s] & z_set)
        if out_to_z != 1 or in_from_z != g.degree(s) - 1 or in_from_z < 1:
            issues.append(
                ObservationIssue(
                    issue_type="j41_degree_rule",
                    severity="error",
                    vertex=s,
                    description=(
                        f"J41 vertex {s} has {out_to_z} arcs into Z and {in_from_z} from Z, "
                        f"expected 1 and {g.degree(s) - 1}"
                    ),
                )
            )
    return issues


def _check_lemma1(g: UndirectedGraph, p: Partition3, o: Orientation) -> list[ObservationIssue]:
    issues: list[ObservationIssue] = []
    for s_name, prime_name in (("Z", "J42"), ("x", "X3"), ("y", "Y3")):
        prime = p.cell(prime_name)
        if not prime:
            continue
        instance = Lemma1Instance(host=g, s_set=p.cell(s_name), s_prime=prime)
        arcs = [o.direction(a, b) for a, b in sorted(instance.subgraph_edges())]
        verdict = verify_lemma1(instance, arcs)
        if not verdict.holds:
            side = "from" if verdict.direction == "from_s" else "to"
            issues.append(
                ObservationIssue(
                    issue_type="lemma1_bound",
                    severity="error",
                    vertex=verdict.vertex,
                    distance=verdict.distance,
                    bound=2,
                    description=(
                        f"{prime_name} vertex {verdict.vertex} is more than 2 steps {side} {s_name}"
                    ),
                )
            )
    return issues


def check_observations(g: UndirectedGraph, p: Partition3, o: Orientation) -> ObservationReport:
    """Run every structural assertion the partition orientation must satisfy.

    Checks, in order:
    - every X2 vertex has an X1 neighbour, every Y2 vertex a Y1 neighbour
    - d(y, s) <= 3 for s in X1 and d(s, x) <= 3 for s in Y1
    - if Z is nonempty, the same with bound 4 for X2 u X3 and Y2 u Y3
    - Z empty implies I, J and K empty
    - each J41 vertex has one arc into Z and all its other edges from Z
    - the three two-step reach instances hold on the oriented edges
    - strong connectivity (reported as a warning)

    Args:
        g: The graph.
        p: Partition of g.
        o: Orientation of g (usually from the partition rules).

    Returns:
        ObservationReport listing every failed assertion with its witness.

    Raises:
        InputError: If o or p do not belong to g.
    """
    if o.base != g or p.n != g.n:
        raise InputError("partition and orientation must belong to the graph")

    report = ObservationReport()
    report.checks_run.append("side_neighbors")
    report.issues.extend(_check_side_neighbors(g, p))

    from_y = bfs_distances(o, p.y)
    to_x = bfs_distances(o.reversed(), p.x)
    report.checks_run.append("near_reach")
    report.issues.extend(
        _check_reach(("X1",), p, from_y, NEAR_BOUND, "x1_far_from_y", "X1 vertex {s} is more than {bound} steps from y")
    )
    report.issues.extend(
        _check_reach(("Y1",), p, to_x, NEAR_BOUND, "y1_far_from_x", "Y1 vertex {s} is more than {bound} steps to x")
    )
    if p.cell("Z"):
        report.checks_run.append("far_reach")
        report.issues.extend(
            _check_reach(
                ("X2", "X3"), p, from_y, FAR_BOUND, "x_side_far_from_y",
                "{cell} vertex {s} is more than {bound} steps from y",
            )
        )
        report.issues.extend(
            _check_reach(
                ("Y2", "Y3"), p, to_x, FAR_BOUND, "y_side_far_from_x",
                "{cell} vertex {s} is more than {bound} steps to x",
            )
        )

    report.checks_run.append("case2")
    report.issues.extend(_check_case2(p))
    report.checks_run.append("j41_degree")
    report.issues.extend(_check_j41_degrees(g, p, o))
    report.checks_run.append("lemma1")
    report.issues.extend(_check_lemma1(g, p, o))

    report.checks_run.append("strong_connectivity")
    if not is_strongly_connected(o):
        report.issues.append(
            ObservationIssue(
                issue_type="not_strongly_connected",
                severity="warning",
                distance=INF,
                description="orientation is not strongly connected",
            )
        )
    return report
