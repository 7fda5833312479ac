"""Command-line interface for orienting bridgeless graphs."""

import argparse
import os
import sys
import time
from contextlib import contextmanager
from pathlib import Path
from typing import Callable, Iterator, NoReturn, Optional

import numpy as np
from tqdm import tqdm

from src.models.class_report import ClassParams
from src.models.errors import CapabilityError, InputError, StructuralError
from src.models.graph import DiameterCertificate, Orientation, UndirectedGraph
from src.models.partition import OrientationPlan
from src.models.report import THEOREM_BOUND, GuaranteeStatus, RunReport
from src.models.search import DEFAULT_NODE_BUDGET, SearchConfig
from src.services.class_checker import (
    DEFAULT_MIN_EDGES_BUDGET,
    check_edge_disjoint_paths,
    check_observation1,
    in_class,
    min_edges_in_class,
)
from src.services.distances import diameter
from src.services.exact_search import oriented_diameter_exact
from src.services.generator import GENERATOR_KINDS, PLANTED_PARAMS, generate
from src.services.loader import load_graph, load_graph6, load_orientation, parse_orientation
from src.services.observations import check_observations
from src.services.orienter import orient_d3, orient_via_spanning_subgraph, verify_theorem1
from src.services.reporter import (
    build_class_report,
    build_diameter_report,
    build_exact_report,
    build_gen_report,
    build_min_edges_report,
    build_orient_report,
    build_verify_report,
    build_witness_report,
    emit_graph,
    emit_orientation,
    render,
    write_text,
)
from src.services.witness import DEFAULT_SAMPLES_PER_SIZE, search_witness

THREADS_ENV = "ORIADIM_THREADS"
DEFAULT_GEN_SEED = 0
DEFAULT_GEN_VERTICES = 12

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAPABILITY = 2
EXIT_STRUCTURAL = 3


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with the input-error code."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"Error: {message}\n")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--threads",
        type=int,
        default=None,
        help=f"Worker threads for exact search (default: ${THREADS_ENV} or 1)",
    )
    common.add_argument("--quiet", "-q", action="store_true", help="Suppress progress bar output")
    common.add_argument(
        "--report",
        choices=("json", "text"),
        default="json",
        help="Report format (default: json)",
    )
    common.add_argument("--report-file", type=str, default=None, help="Write the report to this file")
    common.add_argument("--output", "-o", type=str, default=None, help="Write the arc or edge list to this file")
    common.add_argument("--timings", action="store_true", help="Include per-step timings in the report")
    common.add_argument("--seed", type=int, default=None, help="Seed for randomized steps")
    common.add_argument(
        "--budget",
        type=int,
        default=None,
        help=f"Search budget: branch-and-bound nodes (default: {DEFAULT_NODE_BUDGET}) "
        f"or, for min-edges, candidate graphs (default: {DEFAULT_MIN_EDGES_BUDGET})",
    )
    return common


def _add_class_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--k", type=int, required=True, help="Diameter bound k")
    parser.add_argument("--lambda", dest="lam", type=int, required=True, help="Diameter bound after deletions")
    parser.add_argument("--s", type=int, required=True, help="Number of edges that may be deleted")


def parse_args(args: list[str] | None = None) -> argparse.Namespace:
    """Parse command-line arguments.

    Args:
        args: Command-line arguments. If None, uses sys.argv.

    Returns:
        Parsed arguments namespace.
    """
    common = _common_options()
    parser = _Parser(
        description="Orient bridgeless graphs with small directed diameter.",
        prog="python -m src.oriadim",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    orient = sub.add_parser("orient", parents=[common], help="Orient a graph by the partition construction")
    orient.add_argument("graph", help="Graph file")
    orient.add_argument(
        "--spanning",
        type=str,
        default=None,
        help="Spanning subgraph file to orient first; remaining edges go low -> high",
    )

    diam = sub.add_parser("diameter", parents=[common], help="Diameter of a graph or orientation")
    diam.add_argument("file", help="Graph file, or orientation file with --oriented")
    diam.add_argument("--oriented", action="store_true", help="Read the file as an arc list")

    exact = sub.add_parser("exact", parents=[common], help="Exact oriented diameter by branch-and-bound")
    exact.add_argument("graph", help="Graph file")
    exact.add_argument("--target", type=int, default=None, help="Stop once diameter <= target is found")

    check = sub.add_parser("check-class", parents=[common], help="Membership in G(n, k, lambda, s)")
    check.add_argument("graph", help="Graph file")
    _add_class_params(check)
    check.add_argument(
        "--with-min-edges", action="store_true", help="Also compute M(n, k, lambda, s) for the graph's vertex count"
    )

    verify = sub.add_parser("verify", parents=[common], help="Distance certificate of an orientation")
    verify.add_argument("orientation", help="Orientation (arc list) file")
    verify.add_argument("graph", help="Graph file the orientation must orient")

    witness = sub.add_parser(
        "witness-search", parents=[common], help="Search diameter-3 graphs with large oriented diameter"
    )
    witness.add_argument("--n-max", type=int, required=True, help="Largest vertex count")
    witness.add_argument("--target", type=int, default=THEOREM_BOUND, help="Oriented diameter to reach")
    witness.add_argument(
        "--samples",
        type=int,
        default=DEFAULT_SAMPLES_PER_SIZE,
        help=f"Random graphs per size above 7 vertices (default: {DEFAULT_SAMPLES_PER_SIZE})",
    )
    witness.add_argument(
        "--graphs", type=str, default=None, help="graph6 file (e.g. geng output) replacing atlas and sampling"
    )

    gen = sub.add_parser("gen", parents=[common], help="Generate test instances")
    gen.add_argument("kind", choices=GENERATOR_KINDS, help="Generator")
    gen.add_argument("--n", type=int, default=DEFAULT_GEN_VERTICES, help="Vertex count (ignored for c5)")
    gen.add_argument("--count", type=int, default=1, help="Number of graphs (needs --output-dir above 1)")
    gen.add_argument("--output-dir", type=str, default=None, help="Directory for generated graph files")

    min_edges = sub.add_parser("min-edges", parents=[common], help="Fewest edges of an n-vertex class member")
    min_edges.add_argument("--n", type=int, required=True, help="Vertex count (at most 10)")
    _add_class_params(min_edges)

    return parser.parse_args(args)


def resolve_workers(threads: Optional[int]) -> int:
    """Worker count: --threads wins over ORIADIM_THREADS; default 1.

    Raises:
        InputError: If the value is not a positive integer.
    """
    raw: Optional[str] = str(threads) if threads is not None else os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return 1
    try:
        workers = int(raw)
    except ValueError:
        raise InputError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if workers < 1:
        raise InputError(f"thread count must be positive, got {workers}")
    return workers


def _search_config(parsed: argparse.Namespace, target: Optional[int] = None) -> SearchConfig:
    return SearchConfig(
        node_budget=parsed.budget if parsed.budget is not None else DEFAULT_NODE_BUDGET,
        target=target,
        workers=resolve_workers(parsed.threads),
        seed=parsed.seed,
    )


class _Steps:
    """Step progress bar plus optional wall-clock timings per step."""

    def __init__(self, steps: list[str], quiet: bool, desc: str) -> None:
        self.pbar = None if quiet else tqdm(total=len(steps), desc=desc, unit="step")
        self.timings: dict[str, float] = {}

    @contextmanager
    def step(self, name: str) -> Iterator[None]:
        if self.pbar:
            self.pbar.set_description(name)
        start = time.perf_counter()
        try:
            yield
        finally:
            self.timings[name] = time.perf_counter() - start
            if self.pbar:
                self.pbar.update(1)

    def close(self) -> None:
        if self.pbar:
            self.pbar.close()


def _counter(quiet: bool, desc: str, unit: str) -> tuple[Optional[tqdm], Optional[Callable[[], None]]]:
    if quiet:
        return None, None
    pbar = tqdm(desc=desc, unit=unit)
    return pbar, lambda: pbar.update(1)


def _deliver_report(report: RunReport, parsed: argparse.Namespace, to_stderr: bool = False) -> None:
    text = render(report, parsed.report)
    if parsed.report_file:
        write_text(text, Path(parsed.report_file))
        if not parsed.quiet:
            print(f"Report written to: {parsed.report_file}", file=sys.stderr)
    elif to_stderr:
        sys.stderr.write(text)
    else:
        sys.stdout.write(text)


def _deliver_listing(text: str, output: Optional[str]) -> None:
    if output:
        write_text(text + "\n", Path(output))
    else:
        sys.stdout.write(text + "\n")


def _timings(parsed: argparse.Namespace, steps: _Steps) -> Optional[dict[str, float]]:
    return steps.timings if parsed.timings else None


def _self_check(o: Orientation, cert: DiameterCertificate) -> str:
    """Re-parse the emitted arc list and recompute its diameter.

    Raises:
        StructuralError: If the round trip or the recomputed diameter differs.
    """
    text = emit_orientation(o)
    reparsed = parse_orientation(text)
    if reparsed.n != o.n or reparsed.arcs != o.arcs:
        raise StructuralError("emitted arc list does not reproduce the orientation")
    if diameter(reparsed).diameter != cert.diameter:
        raise StructuralError("recomputed diameter differs from the certificate")
    return text


def _guarantee(g: UndirectedGraph, plan: OrientationPlan, cert: DiameterCertificate) -> GuaranteeStatus:
    if plan.mode != "partition":
        return GuaranteeStatus(applies=False)
    member = in_class(g, PLANTED_PARAMS).member
    return GuaranteeStatus(
        applies=member,
        member=member,
        holds=cert.diameter <= THEOREM_BOUND if member else None,
    )


def run_orient(parsed: argparse.Namespace) -> int:
    steps = _Steps(
        ["Loading graph", "Orienting", "Certifying", "Checking observations", "Writing output"],
        parsed.quiet,
        desc="Orienting",
    )
    try:
        with steps.step("Loading graph"):
            g = load_graph(parsed.graph)
            h = load_graph(parsed.spanning) if parsed.spanning else g
        with steps.step("Orienting"):
            cfg = _search_config(parsed)
            if parsed.spanning:
                o, plan = orient_via_spanning_subgraph(g, h, cfg)
            else:
                o, plan = orient_d3(g, cfg)
        with steps.step("Certifying"):
            cert = verify_theorem1(g, o)
            text = _self_check(o, cert)
            guarantee = _guarantee(h, plan, cert)
        with steps.step("Checking observations"):
            observations = None
            if plan.partition is not None:
                sub_arcs = frozenset(arc for arc in o.arcs if h.has_edge(*arc))
                observations = check_observations(h, plan.partition, Orientation(h, sub_arcs))
        with steps.step("Writing output"):
            _deliver_listing(text, parsed.output)
            report = build_orient_report(g, o, plan, cert, guarantee, observations, _timings(parsed, steps))
    finally:
        steps.close()

    _deliver_report(report, parsed, to_stderr=True)
    if guarantee.applies and not guarantee.holds:
        print(
            f"Error: diameter {cert.finite_diameter()} exceeds the guaranteed bound {THEOREM_BOUND}",
            file=sys.stderr,
        )
        return EXIT_STRUCTURAL
    if observations is not None and not observations.passed:
        print("Error: structural observations failed", file=sys.stderr)
        return EXIT_STRUCTURAL
    return EXIT_OK


def run_diameter(parsed: argparse.Namespace) -> int:
    steps = _Steps(["Loading input", "Measuring"], parsed.quiet, desc="Measuring")
    try:
        with steps.step("Loading input"):
            o = load_orientation(parsed.file) if parsed.oriented else None
            g = o.base if o is not None else load_graph(parsed.file)
        with steps.step("Measuring"):
            cert = diameter(o if o is not None else g)
    finally:
        steps.close()
    _deliver_report(build_diameter_report(g, cert, o, _timings(parsed, steps)), parsed)
    return EXIT_OK


def run_exact(parsed: argparse.Namespace) -> int:
    steps = _Steps(["Loading graph", "Searching", "Certifying"], parsed.quiet, desc="Searching")
    try:
        with steps.step("Loading graph"):
            g = load_graph(parsed.graph)
        with steps.step("Searching"):
            result = oriented_diameter_exact(g, _search_config(parsed, target=parsed.target))
        with steps.step("Certifying"):
            cert = verify_theorem1(g, result.orientation)
            text = _self_check(result.orientation, cert)
    finally:
        steps.close()
    if parsed.output:
        _deliver_listing(text, parsed.output)
    _deliver_report(build_exact_report(g, result, cert, _timings(parsed, steps)), parsed)
    return EXIT_OK


def run_check_class(parsed: argparse.Namespace) -> int:
    params = ClassParams(k=parsed.k, lam=parsed.lam, s=parsed.s)
    names = ["Loading graph", "Checking membership"] + (["Counting edges"] if parsed.with_min_edges else [])
    steps = _Steps(names, parsed.quiet, desc="Checking")
    try:
        with steps.step("Loading graph"):
            g = load_graph(parsed.graph)
        with steps.step("Checking membership"):
            verdict = in_class(g, params)
            sanity: dict[str, bool] = {}
            if verdict.member:
                sanity = {
                    "min_degree": check_observation1(g, params),
                    "edge_disjoint_paths": check_edge_disjoint_paths(g, params),
                }
        if parsed.with_min_edges:
            with steps.step("Counting edges"):
                budget = parsed.budget if parsed.budget is not None else DEFAULT_MIN_EDGES_BUDGET
                minimum = min_edges_in_class(g.n, params, budget=budget)
                # a budget-limited lower bound is not M(n, k, lambda, s)
                verdict.min_edge_count = minimum.min_edges if minimum.proven else None
    finally:
        steps.close()
    _deliver_report(build_class_report(g, verdict, sanity, _timings(parsed, steps)), parsed)
    if not all(sanity.values()):
        print("Error: member fails the minimum degree or connectivity check", file=sys.stderr)
        return EXIT_STRUCTURAL
    return EXIT_OK


def run_verify(parsed: argparse.Namespace) -> int:
    steps = _Steps(["Loading input", "Certifying"], parsed.quiet, desc="Verifying")
    try:
        with steps.step("Loading input"):
            g = load_graph(parsed.graph)
            loaded = load_orientation(parsed.orientation)
            if loaded.n != g.n:
                raise InputError(f"orientation has {loaded.n} vertices, graph has {g.n}")
            o = Orientation(g, loaded.arcs)
        with steps.step("Certifying"):
            cert = verify_theorem1(g, o)
    finally:
        steps.close()
    _deliver_report(build_verify_report(g, o, cert, _timings(parsed, steps)), parsed)
    return EXIT_OK


def run_witness_search(parsed: argparse.Namespace) -> int:
    graphs = load_graph6(parsed.graphs) if parsed.graphs else None
    start = time.perf_counter()
    pbar, tick = _counter(parsed.quiet, "Examining graphs", "graph")
    try:
        result = search_witness(
            parsed.n_max,
            parsed.target,
            _search_config(parsed),
            samples=parsed.samples,
            on_graph=tick,
            graphs=graphs,
        )
    finally:
        if pbar:
            pbar.close()
    timings = {"search": time.perf_counter() - start} if parsed.timings else None
    _deliver_report(build_witness_report(result, timings), parsed)
    return EXIT_OK


def run_gen(parsed: argparse.Namespace) -> int:
    if parsed.count < 1:
        raise InputError(f"count must be positive, got {parsed.count}")
    if parsed.count > 1 and not parsed.output_dir:
        raise InputError("--count above 1 needs --output-dir")
    seed = parsed.seed if parsed.seed is not None else DEFAULT_GEN_SEED
    rng = np.random.default_rng(seed)
    start = time.perf_counter()
    graphs: list[UndirectedGraph] = []
    files: list[str] = []
    for index in tqdm(range(parsed.count), desc="Generating", unit="graph", disable=parsed.quiet):
        graph = generate(parsed.kind, parsed.n, rng)
        graphs.append(graph)
        if parsed.output_dir:
            path = Path(parsed.output_dir) / f"{parsed.kind}_n{graph.n}_s{seed}_{index:03d}.graph"
            write_text(emit_graph(graph) + "\n", path)
            files.append(str(path))
        else:
            _deliver_listing(emit_graph(graph), parsed.output)
            if parsed.output:
                files.append(parsed.output)
    timings = {"generate": time.perf_counter() - start} if parsed.timings else None
    _deliver_report(build_gen_report(parsed.kind, parsed.n, seed, graphs, files, timings), parsed, to_stderr=True)
    return EXIT_OK


def run_min_edges(parsed: argparse.Namespace) -> int:
    params = ClassParams(k=parsed.k, lam=parsed.lam, s=parsed.s)
    budget = parsed.budget if parsed.budget is not None else DEFAULT_MIN_EDGES_BUDGET
    start = time.perf_counter()
    pbar, tick = _counter(parsed.quiet, "Examining graphs", "graph")
    try:
        result = min_edges_in_class(parsed.n, params, budget=budget, on_graph=tick)
    finally:
        if pbar:
            pbar.close()
    timings = {"search": time.perf_counter() - start} if parsed.timings else None
    _deliver_report(build_min_edges_report(result, timings), parsed)
    return EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace], int]] = {
    "orient": run_orient,
    "diameter": run_diameter,
    "exact": run_exact,
    "check-class": run_check_class,
    "verify": run_verify,
    "witness-search": run_witness_search,
    "gen": run_gen,
    "min-edges": run_min_edges,
}


def main(args: list[str] | None = None) -> int:
    """Main entry point for CLI.

    Args:
        args: Command-line arguments. If None, uses sys.argv.

    Returns:
        Exit code: 0 success, 1 input or usage error, 2 cap or budget
        exceeded, 3 structural or self-consistency failure.
    """
    try:
        parsed_args = parse_args(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT

    try:
        return COMMANDS[parsed_args.command](parsed_args)
    except InputError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapabilityError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except StructuralError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL


if __name__ == "__main__":
    sys.exit(main())
