import logging
from pathlib import Path

import pytest

from src.graphs.generators import complete_graph, cycle_graph, path_graph, star_graph
from src.graphs.graph_core import Graph
from strategies.reductions.wp2sat import figure_instance

ROOT = Path(__file__).resolve().parent.parent
INSTANCES = ROOT / "data" / "instances"


@pytest.fixture
def blocker_logs(caplog):
    """caplog wired to the 'blocker' logger tree, which does not propagate."""
    root = logging.getLogger("blocker")
    root.addHandler(caplog.handler)
    previous = root.level
    root.setLevel(logging.DEBUG)
    yield caplog
    root.setLevel(previous)
    root.removeHandler(caplog.handler)


@pytest.fixture
def instances_dir():
    return INSTANCES


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def p4():
    return path_graph(4)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def c6():
    return cycle_graph(6)


@pytest.fixture
def k3():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def claw():
    """K_{1,3} with center 0."""
    return star_graph(4)


@pytest.fixture
def paw():
    """Triangle 0-1-2 with pendant 3 on vertex 2."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


@pytest.fixture
def figure_phi():
    return figure_instance()


@pytest.fixture(scope="session")
def long_scrambled_path():
    """
    A path on 3000 vertices whose labels make Hopcroft-Karp grow a single
    augmenting path through the whole graph: odd path positions 2j+1 get
    labels j, even positions 2j get labels 1500 + (1499 - j).
    """
    half = 1500

    def label(position):
        if position % 2:
            return position // 2
        return half + (half - 1 - position // 2)

    return Graph.from_edges(2 * half, [(label(i), label(i + 1)) for i in range(2 * half - 1)])
