"""Shared pytest fixtures for oriadim tests."""

from pathlib import Path

import pytest
from hypothesis import settings

from src.models.graph import UndirectedGraph

settings.register_profile("oriadim", deadline=None, max_examples=60)
settings.load_profile("oriadim")


@pytest.fixture
def fixtures_dir() -> Path:
    """Return the path to the test fixtures directory."""
    return Path(__file__).parent / "fixtures"


@pytest.fixture
def c5_path(fixtures_dir: Path) -> Path:
    return fixtures_dir / "c5.graph"


@pytest.fixture
def k4_path(fixtures_dir: Path) -> Path:
    return fixtures_dir / "k4.graph"


@pytest.fixture
def p4_path(fixtures_dir: Path) -> Path:
    return fixtures_dir / "p4.graph"


@pytest.fixture
def w_gadget_path(fixtures_dir: Path) -> Path:
    """Graph whose partition puts one vertex in each of Z, X1, Y1 and W."""
    return fixtures_dir / "w_gadget.graph"


@pytest.fixture
def c3() -> UndirectedGraph:
    return UndirectedGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def c5() -> UndirectedGraph:
    return UndirectedGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.fixture
def k4() -> UndirectedGraph:
    return UndirectedGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def p4() -> UndirectedGraph:
    return UndirectedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def bridged() -> UndirectedGraph:
    """Two triangles joined by the bridge {2,3}."""
    return UndirectedGraph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]
    )


@pytest.fixture
def w_gadget() -> UndirectedGraph:
    return UndirectedGraph.from_edges(
        8, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4), (2, 5), (3, 6), (5, 7), (6, 7)]
    )
