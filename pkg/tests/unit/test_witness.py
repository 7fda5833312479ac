"""Unit tests for the witness search."""

from pathlib import Path

import pytest


class TestGeneralOrientationBounds:
    """Tests for general_orientation_bounds() function."""

    def test_diameter_three(self) -> None:
        """d = 3 reports the general range and the sharper known one."""
        from src.services.witness import general_orientation_bounds

        bounds = general_orientation_bounds(3)

        assert bounds == {"d": 3, "general_lower": 8, "general_upper": 24, "known_lower": 9, "known_upper": 11}

    def test_diameter_one_is_exact(self) -> None:
        """d = 1 is settled at 3."""
        from src.services.witness import general_orientation_bounds

        bounds = general_orientation_bounds(1)

        assert bounds["general_lower"] == 2
        assert bounds["general_upper"] == 4
        assert bounds["known_lower"] == bounds["known_upper"] == 3

    def test_unknown_range(self) -> None:
        """Larger d has no sharper range."""
        from src.services.witness import general_orientation_bounds

        bounds = general_orientation_bounds(5)

        assert bounds["general_lower"] == 18
        assert bounds["known_lower"] is None

    def test_rejects_zero(self) -> None:
        """d must be positive."""
        from src.models.errors import InputError
        from src.services.witness import general_orientation_bounds

        with pytest.raises(InputError):
            general_orientation_bounds(0)


class TestSearchWitness:
    """Tests for search_witness() function."""

    def test_no_small_graph_reaches_nine(self) -> None:
        """The 52 atlas graphs on up to five vertices hold no witness."""
        from src.services.witness import search_witness

        result = search_witness(5, 9)

        assert result.witnesses == []
        assert result.graphs_examined == 52
        assert result.candidates > 0
        assert result.proven_exhaustive

    def test_low_target_finds_the_square(self) -> None:
        """Target 3 finds C4, with witnesses sorted by size."""
        from src.services.witness import search_witness

        result = search_witness(4, 3)

        assert result.witnesses
        assert all(w.oriented_diameter >= 3 for w in result.witnesses)
        assert any(w.graph.n == 4 and w.graph.m == 4 for w in result.witnesses)
        assert all(w.graph.n >= 4 for w in result.witnesses)
        assert result.witnesses == sorted(result.witnesses, key=lambda w: (w.graph.n, w.graph.sorted_edges()))

    def test_sampling_clears_exhaustive_flag(self) -> None:
        """Sampling above seven vertices is never exhaustive."""
        from src.models.search import SearchConfig
        from src.services.witness import search_witness

        examined: list[int] = []
        result = search_witness(8, 9, SearchConfig(seed=1), samples=3, on_graph=lambda: examined.append(1))

        assert not result.exhaustive
        assert not result.proven_exhaustive
        assert len(examined) == result.graphs_examined

    def test_rejects_bad_arguments(self) -> None:
        """Non-positive bounds and negative samples are input errors."""
        from src.models.errors import InputError
        from src.services.witness import search_witness

        with pytest.raises(InputError):
            search_witness(0, 9)
        with pytest.raises(InputError):
            search_witness(5, 0)
        with pytest.raises(InputError):
            search_witness(5, 9, samples=-1)

    def test_result_to_dict_carries_bounds(self) -> None:
        """The result serialises with the published bounds."""
        from src.services.witness import search_witness

        result = search_witness(3, 9).to_dict()

        assert result["bounds"]["known_lower"] == 9
        assert result["proven_exhaustive"] is True
        assert result["witnesses"] == []

    def test_graph_list_replaces_atlas(self, fixtures_dir: Path) -> None:
        """A supplied graph6 list is scanned instead of the atlas."""
        from src.services.loader import load_graph6
        from src.services.witness import search_witness

        result = search_witness(5, 3, graphs=load_graph6(fixtures_dir / "small.g6"))

        assert result.graphs_examined == 5
        assert result.candidates == 4
        assert [w.graph.n for w in result.witnesses] == [4, 4, 5]
        assert [w.graph.m for w in result.witnesses] == [6, 4, 5]
        assert [w.oriented_diameter for w in result.witnesses] == [3, 3, 4]
        assert result.proven_exhaustive

    def test_graph_list_skips_larger_graphs(self, fixtures_dir: Path) -> None:
        """Graphs above n_max in a supplied list are not examined."""
        from src.services.loader import load_graph6
        from src.services.witness import search_witness

        result = search_witness(4, 3, graphs=load_graph6(fixtures_dir / "small.g6"))

        assert result.graphs_examined == 4
        assert all(w.graph.n == 4 for w in result.witnesses)

    def test_graph_list_exhaustive_up_to_nine(self, fixtures_dir: Path) -> None:
        """A supplied list counts as exhaustive through nine vertices only."""
        from src.services.loader import load_graph6
        from src.services.witness import search_witness

        graphs = load_graph6(fixtures_dir / "small.g6")

        assert search_witness(9, 9, graphs=graphs).exhaustive
        assert not search_witness(10, 9, graphs=graphs).exhaustive
