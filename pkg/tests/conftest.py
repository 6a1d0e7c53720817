"""Shared fixtures: small graphs, the bundled G_4 and graph files on disk."""

from typing import Callable

import pytest

from app.services.families import FamilyOutput, load_g4
from app.services.graph_core import Graph, write_graph

from .helpers import complete, cycle, path


@pytest.fixture
def p3() -> Graph:
    """Path 1-2-3."""
    return path(3)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture(scope="session")
def g4() -> FamilyOutput:
    """The bundled G_4, validated once per session."""
    return load_g4()


@pytest.fixture
def graph_file(tmp_path) -> Callable[[Graph, str], str]:
    """Write a graph into the temporary directory and return its path."""

    def write(g: Graph, name: str = "graph.gr") -> str:
        target = tmp_path / name
        write_graph(g, str(target))
        return str(target)

    return write
