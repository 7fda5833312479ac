"""Partition-based orientation of diameter-3 graphs, with fallbacks."""

from dataclasses import replace
from typing import Optional

from src.models.errors import InputError, StructuralError
from src.models.graph import Arc, DiameterCertificate, Edge, Orientation, UndirectedGraph, normalize_edge
from src.models.partition import (
    Lemma1Instance,
    OrientationPlan,
    Partition3,
    RuleApplication,
    RuleConflict,
)
from src.models.search import SearchConfig
from src.services.bridges import require_bridgeless
from src.services.class_checker import find_adjacent_degree2_pair
from src.services.distances import diameter, is_connected, is_strongly_connected
from src.services.exact_search import (
    improve_orientation,
    oriented_diameter_exact,
    robbins_orient,
)
from src.services.lemma1 import orient_lemma1
from src.services.partitioner import partition_vertices

EXACT_VERTEX_CAP = 10
EXACT_EDGE_CAP = 20
MIN_PARTITION_VERTICES = 5

# (tail, head) pairs in application order; first match wins.
CYCLE_RULES: tuple[tuple[str, str], ...] = (
    ("u", "v"), ("v", "y"), ("y", "Y1"), ("Y1", "W"), ("W", "X1"), ("X1", "x"), ("x", "u"),
)
SET_RULES: tuple[tuple[str, str], ...] = (
    ("y", "Z"), ("Z", "x"), ("Y1", "Z"), ("Z", "X1"),
    ("Y1", "K"), ("K", "Z"), ("Z", "I"), ("I", "X1"),
    ("K", "J"), ("J", "I"), ("J", "W"),
    ("x", "X2"), ("X2", "X1"), ("Y1", "Y2"), ("Y2", "y"),
    ("J1", "Z"), ("Z", "J2"), ("Z", "J3"),
)
# y reaches X1 through Y1, which needs these two explicitly.
CHORD_RULES: tuple[tuple[str, str], ...] = (("Y1", "X1"), ("y", "x"))

# (rule name, set S, set S')
LEMMA1_TARGETS: tuple[tuple[str, str, str], ...] = (
    ("lemma1(Z,J42)", "Z", "J42"),
    ("lemma1(x,X3)", "x", "X3"),
    ("lemma1(y,Y3)", "y", "Y3"),
)


class _RuleBook:
    """Collects arcs with first-match-wins semantics and an audit trail."""

    def __init__(self, g: UndirectedGraph) -> None:
        self.g = g
        self.chosen: dict[Edge, tuple[Arc, str]] = {}
        self.applied: list[RuleApplication] = []
        self.conflicts: list[RuleConflict] = []

    def offer(self, rule: str, arc: Arc) -> None:
        edge = normalize_edge(*arc)
        if edge not in self.g.edges:
            return
        if edge in self.chosen:
            kept, kept_by = self.chosen[edge]
            if kept != arc:
                self.conflicts.append(
                    RuleConflict(rule=rule, edge=edge, attempted=arc, kept=kept, kept_by=kept_by)
                )
            return
        self.chosen[edge] = (arc, rule)
        self.applied.append(RuleApplication(rule=rule, edge=edge, arc=arc))

    def offer_sets(self, p: Partition3, tail: str, head: str) -> None:
        """Orient every edge between two cells from ``tail`` to ``head``."""
        heads = p.cell(head)
        rule = f"{tail}->{head}"
        for a in sorted(p.cell(tail)):
            for b in sorted(self.g.neighbors(a) & heads):
                self.offer(rule, (a, b))


def _apply_rules(g: UndirectedGraph, p: Partition3) -> tuple[Orientation, OrientationPlan]:
    book = _RuleBook(g)
    for tail, head in CYCLE_RULES + SET_RULES + CHORD_RULES:
        book.offer_sets(p, tail, head)

    z_set = p.cell("Z")
    for s in sorted(p.cell("J41")):
        into = sorted(g.neighbors(s) & z_set)
        book.offer("J41->Z", (s, into[0]))
        for z in into[1:]:
            book.offer("Z->J41", (z, s))

    for rule, s_name, prime_name in LEMMA1_TARGETS:
        prime = p.cell(prime_name)
        if not prime:
            continue
        instance = Lemma1Instance(host=g, s_set=p.cell(s_name), s_prime=prime)
        for arc in orient_lemma1(instance).values():
            book.offer(rule, arc)

    leftover: list[Arc] = []
    for a, b in g.sorted_edges():
        if (a, b) in book.chosen:
            continue
        arc = (a, b) if (p.rank(a), a) <= (p.rank(b), b) else (b, a)
        leftover.append(arc)

    arcs = [arc for arc, _ in book.chosen.values()] + leftover
    plan = OrientationPlan(
        mode="partition",
        partition=p,
        rules_applied=book.applied,
        leftover_edges=leftover,
        conflicts=book.conflicts,
    )
    return Orientation(g, frozenset(arcs)), plan


def orient_partition(g: UndirectedGraph, p: Partition3) -> tuple[Orientation, OrientationPlan]:
    """Apply the rule list to a given partition, without any fallback."""
    if p.n != g.n:
        raise InputError("partition and graph have different vertex counts")
    return _apply_rules(g, p)


def _fallback(g: UndirectedGraph, cfg: SearchConfig, reason: str) -> tuple[Orientation, OrientationPlan]:
    if g.m <= cfg.edge_cap and (g.n <= EXACT_VERTEX_CAP or g.m <= EXACT_EDGE_CAP):
        result = oriented_diameter_exact(g, cfg)
        plan = OrientationPlan(
            mode="fallback-exact", fallback_reason=reason, proven_optimal=result.proven_optimal
        )
        return result.orientation, plan
    orientation = improve_orientation(g, robbins_orient(g), cfg)
    plan = OrientationPlan(mode="fallback-heuristic", fallback_reason=reason, proven_optimal=False)
    return orientation, plan


def orient_d3(g: UndirectedGraph, cfg: Optional[SearchConfig] = None) -> tuple[Orientation, OrientationPlan]:
    """Orient a bridgeless graph using the partition construction when possible.

    The construction needs at least 5 vertices, an adjacent degree-2 pair
    with distinct outer neighbours, and a partition without structural
    errors. Otherwise, or if the rule orientation is not strongly connected,
    the graph goes to exact search (n <= 10 or m <= 20) or to a Robbins
    orientation improved by local search.

    Args:
        g: Connected bridgeless graph.
        cfg: Search settings for the fallback paths.

    Returns:
        The orientation and the plan describing how it was produced.

    Raises:
        InputError: If g is empty or disconnected.
        BridgeError: If g has a bridge.
    """
    cfg = cfg or SearchConfig()
    if g.n == 0:
        raise InputError("cannot orient the empty graph")
    if not is_connected(g):
        raise InputError("graph is disconnected")
    require_bridgeless(g)

    if g.n < MIN_PARTITION_VERTICES:
        return _fallback(g, cfg, f"fewer than {MIN_PARTITION_VERTICES} vertices")
    gadget = find_adjacent_degree2_pair(g)
    if gadget is None:
        return _fallback(g, cfg, "no adjacent degree-2 pair with distinct outer neighbours")
    try:
        partition = partition_vertices(g, *gadget)
    except StructuralError as exc:
        return _fallback(g, cfg, f"partition failed: {exc}")

    orientation, plan = _apply_rules(g, partition)
    if not is_strongly_connected(orientation):
        return _fallback(g, cfg, "rule orientation is not strongly connected")
    return orientation, plan


def verify_theorem1(g: UndirectedGraph, o: Orientation) -> DiameterCertificate:
    """Distance certificate of an orientation of g.

    Raises:
        InputError: If o does not orient exactly the edges of g.
    """
    if o.base != g:
        raise InputError("orientation does not match the graph's edge set")
    return diameter(o)


def orient_via_spanning_subgraph(
    g: UndirectedGraph,
    h: UndirectedGraph,
    cfg: Optional[SearchConfig] = None,
) -> tuple[Orientation, OrientationPlan]:
    """Orient g by orienting a spanning subgraph h and adding the rest.

    Edges of g outside h go from the lower id to the higher id. Extra arcs
    only add paths, so the diameter is at most that of the oriented h.

    Raises:
        InputError: If h is not a spanning subgraph of g.
    """
    if not h.is_spanning_subgraph_of(g):
        raise InputError("second graph is not a spanning subgraph of the first")
    sub_orientation, plan = orient_d3(h, cfg)
    extra = sorted(g.edges - h.edges)
    arcs = set(sub_orientation.arcs) | set(extra)
    if plan.mode == "partition":
        plan = replace(plan, leftover_edges=plan.leftover_edges + extra)
    return Orientation(g, frozenset(arcs)), plan
