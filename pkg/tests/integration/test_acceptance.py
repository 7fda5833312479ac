"""Sweeps over generated graphs: bounds, oracles, determinism and round trips."""

import numpy as np
import pytest
from hypothesis import given, settings

from tests.strategies import lemma1_instances

pytestmark = pytest.mark.slow


class TestPlantedInstances:
    """The partition construction on planted class members."""

    def test_two_hundred_members_stay_within_nine(self) -> None:
        """Planted members take the partition route and stay within 9."""
        from src.services.distances import diameter
        from src.services.generator import planted_instance
        from src.services.observations import check_observations
        from src.services.orienter import orient_d3

        rng = np.random.default_rng(2024)
        for index in range(200):
            n = 5 + index % 26
            g = planted_instance(n, rng)
            o, plan = orient_d3(g)

            assert plan.mode == "partition", f"instance {index}: {plan.fallback_reason}"
            assert diameter(o).diameter <= 9, f"instance {index} (n={n})"
            assert plan.conflicts == []
            assert check_observations(g, plan.partition, o).passed

    def test_single_arc_reversal_is_detected(self) -> None:
        """Reversing u -> v leaves u without an out-arc; the checks must notice."""
        from src.services.generator import planted_instance
        from src.services.observations import check_observations
        from src.services.orienter import orient_d3, verify_theorem1

        rng = np.random.default_rng(7)
        for _ in range(40):
            g = planted_instance(int(rng.integers(5, 20)), rng)
            o, plan = orient_d3(g)
            detected = 0
            for application in plan.rules_applied:
                mutated = o.with_reversed_arc(application.arc)
                cert = verify_theorem1(g, mutated)
                report = check_observations(g, plan.partition, mutated)
                if not report.passed or not cert.strongly_connected or cert.diameter > 9:
                    detected += 1
                elif application.arc == (plan.partition.u, plan.partition.v):
                    pytest.fail(f"reversing u -> v went unnoticed on {g.sorted_edges()}")

            assert detected > 0


class TestTwoStepReach:
    """Two-step reach orientation on random valid instances."""

    @settings(max_examples=500)
    @given(lemma1_instances())
    def test_five_hundred_instances(self, inst) -> None:
        """Every random instance meets both reach bounds."""
        from src.services.lemma1 import orient_lemma1, verify_lemma1

        assert verify_lemma1(inst, orient_lemma1(inst)).holds


class TestExactSearch:
    """Exact search against the brute-force oracle and known values."""

    def test_matches_bruteforce_on_small_graphs(self) -> None:
        """Every connected bridgeless atlas graph with at most 10 edges, then 200 random ones."""
        import networkx as nx

        from src.models.graph import UndirectedGraph
        from src.services.bridges import first_bridge
        from src.services.distances import is_connected
        from src.services.exact_search import oriented_diameter_bruteforce, oriented_diameter_exact
        from src.services.generator import ear_graph

        atlas = [
            UndirectedGraph.from_networkx(graph)
            for graph in nx.graph_atlas_g()
            if graph.number_of_nodes() >= 3 and graph.number_of_edges() <= 10
        ]
        stream = [g for g in atlas if is_connected(g) and first_bridge(g) is None]
        rng = np.random.default_rng(11)
        random_graphs: list[UndirectedGraph] = []
        while len(random_graphs) < 200:
            g = ear_graph(int(rng.integers(3, 9)), rng, chord_prob=0.15)
            if g.m <= 10:
                random_graphs.append(g)

        for g in stream + random_graphs:
            expected, _ = oriented_diameter_bruteforce(g)
            assert oriented_diameter_exact(g).diameter == expected, g.sorted_edges()

    @pytest.mark.parametrize("n", range(3, 10))
    def test_cycles(self, n: int) -> None:
        """Cycles C3 to C9 have oriented diameter n - 1."""
        from src.services.exact_search import oriented_diameter_exact
        from src.services.generator import cycle_graph

        assert oriented_diameter_exact(cycle_graph(n)).diameter == n - 1

    @pytest.mark.parametrize(
        ("name", "expected"),
        [("k4", 3), ("k5", 2), ("petersen", 6)],
    )
    def test_known_graphs(self, name: str, expected: int) -> None:
        """K4, K5 and the Petersen graph hit their known values."""
        import networkx as nx

        from src.models.graph import UndirectedGraph
        from src.services.exact_search import oriented_diameter_exact

        graphs = {
            "k4": nx.complete_graph(4),
            "k5": nx.complete_graph(5),
            "petersen": nx.petersen_graph(),
        }
        result = oriented_diameter_exact(UndirectedGraph.from_networkx(graphs[name]))

        assert result.diameter == expected
        assert result.proven_optimal

    def test_robbins_on_five_hundred_graphs(self) -> None:
        """Robbins orientations are strong on random ear graphs."""
        from src.services.distances import is_strongly_connected
        from src.services.exact_search import robbins_orient
        from src.services.generator import ear_graph

        rng = np.random.default_rng(5)
        for _ in range(500):
            g = ear_graph(int(rng.integers(3, 13)), rng, chord_prob=float(rng.uniform(0.0, 0.3)))
            assert is_strongly_connected(robbins_orient(g))

    def test_bridged_graphs_name_their_bridge(self) -> None:
        """Joining two ear graphs by one edge reports that edge."""
        from src.models.errors import BridgeError
        from src.models.graph import UndirectedGraph
        from src.services.exact_search import robbins_orient
        from src.services.generator import ear_graph
        from src.services.orienter import orient_d3

        rng = np.random.default_rng(8)
        for _ in range(50):
            left = ear_graph(int(rng.integers(3, 7)), rng)
            right = ear_graph(int(rng.integers(3, 7)), rng)
            shift = left.n
            edges = list(left.edges) + [(a + shift, b + shift) for a, b in right.edges] + [(0, shift)]
            g = UndirectedGraph.from_edges(left.n + right.n, edges)

            for orient in (robbins_orient, orient_d3):
                with pytest.raises(BridgeError) as info:
                    orient(g)
                assert info.value.bridge == (0, shift)


class TestClassAndWitness:
    """Small exhaustive searches."""

    @pytest.mark.parametrize(("n", "expected"), [(3, 3), (4, 4), (5, 5)])
    def test_min_edges_known_values(self, n: int, expected: int) -> None:
        """M(n, 3, 4, 1) matches the tabulated values."""
        from src.models.class_report import ClassParams
        from src.services.class_checker import min_edges_in_class

        result = min_edges_in_class(n, ClassParams(k=3, lam=4, s=1))

        assert result.min_edges == expected
        assert result.proven

    def test_no_witness_up_to_seven_vertices(self) -> None:
        """No graph on up to seven vertices reaches 9."""
        from src.services.witness import search_witness

        result = search_witness(7, 9)

        assert result.witnesses == []
        assert result.proven_exhaustive


class TestDeterminism:
    """Same input, same bytes."""

    def test_orientation_round_trip_and_repeatability(self) -> None:
        """Orientations repeat and survive emit then parse."""
        from src.services.generator import ear_graph, planted_instance
        from src.services.loader import parse_orientation
        from src.services.orienter import orient_d3
        from src.services.reporter import emit_orientation

        rng = np.random.default_rng(99)
        for index in range(100):
            n = int(rng.integers(5, 16))
            g = planted_instance(n, rng) if index % 2 == 0 else ear_graph(n, rng)
            first, _ = orient_d3(g)
            second, _ = orient_d3(g)
            text = emit_orientation(first)

            assert text == emit_orientation(second)
            assert parse_orientation(text) == first
