"""Unit tests for the graph generators."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st


class TestCycleGraph:
    """Tests for cycle_graph() function."""

    def test_edges(self) -> None:
        """C4 joins consecutive ids and closes at 0."""
        from src.services.generator import cycle_graph

        g = cycle_graph(4)

        assert g.sorted_edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]

    def test_too_small(self) -> None:
        """A cycle needs at least three vertices."""
        from src.models.errors import InputError
        from src.services.generator import cycle_graph

        with pytest.raises(InputError):
            cycle_graph(2)

    def test_c5_example(self, c5) -> None:
        """The built-in example is C5."""
        from src.services.generator import c5_example

        assert c5_example() == c5


class TestPlantedInstance:
    """Tests for planted_instance() function."""

    @settings(max_examples=25)
    @given(st.integers(min_value=5, max_value=18), st.integers(min_value=0, max_value=10_000))
    def test_member_with_gadget(self, n: int, seed: int) -> None:
        """Planted graphs are members and carry the gadget at 0..3."""
        from src.services.class_checker import find_adjacent_degree2_pair, in_class
        from src.services.generator import PLANTED_PARAMS, planted_instance

        g = planted_instance(n, np.random.default_rng(seed))

        assert g.n == n
        assert find_adjacent_degree2_pair(g) == (0, 1, 2, 3)
        assert in_class(g, PLANTED_PARAMS).member

    def test_same_seed_same_graph(self) -> None:
        """Equal seeds give equal graphs."""
        from src.services.generator import planted_instance

        first = planted_instance(14, np.random.default_rng(5))
        second = planted_instance(14, np.random.default_rng(5))

        assert first == second

    def test_rejects_out_of_range(self) -> None:
        """Orders and probabilities outside range are input errors."""
        from src.models.errors import InputError
        from src.services.generator import planted_instance

        with pytest.raises(InputError):
            planted_instance(4, np.random.default_rng(0))
        with pytest.raises(InputError):
            planted_instance(41, np.random.default_rng(0))
        with pytest.raises(InputError):
            planted_instance(10, np.random.default_rng(0), extra_edge_prob=1.5)


class TestEarGraph:
    """Tests for ear_graph() function."""

    @given(st.integers(min_value=3, max_value=25), st.integers(min_value=0, max_value=10_000))
    def test_connected_and_bridgeless(self, n: int, seed: int) -> None:
        """Ear graphs are connected and bridgeless."""
        from src.services.bridges import first_bridge
        from src.services.distances import is_connected
        from src.services.generator import ear_graph

        g = ear_graph(n, np.random.default_rng(seed))

        assert g.n == n
        assert is_connected(g)
        assert first_bridge(g) is None

    def test_too_small(self) -> None:
        """An ear graph needs at least three vertices."""
        from src.models.errors import InputError
        from src.services.generator import ear_graph

        with pytest.raises(InputError):
            ear_graph(2, np.random.default_rng(0))


class TestGenerate:
    """Tests for generate() function."""

    @pytest.mark.parametrize("kind", ["cycle", "c5", "planted", "ears"])
    def test_dispatch(self, kind: str) -> None:
        """Each generator name builds a graph of the right order."""
        from src.services.generator import generate

        g = generate(kind, 9, np.random.default_rng(0))

        assert g.n == (5 if kind == "c5" else 9)

    def test_unknown_kind(self) -> None:
        """Unknown generator names are input errors."""
        from src.models.errors import InputError
        from src.services.generator import generate

        with pytest.raises(InputError, match="unknown generator"):
            generate("petersen", 10, np.random.default_rng(0))
