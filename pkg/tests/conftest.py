import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bullchrome.canon import enumerate_graphs
from bullchrome.graph import Graph


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def graph_strategy(max_n: int = 8, min_n: int = 0):
    """Hypothesis strategy drawing a graph from n and packed edge bits."""
    import hypothesis.strategies as st

    def build(n: int, packed: int) -> Graph:
        edges = []
        k = 0
        for i in range(n):
            for j in range(i + 1, n):
                if (packed >> k) & 1:
                    edges.append((i, j))
                k += 1
        return Graph.from_edges(n, edges)

    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(
            st.just(n), st.integers(0, (1 << (n * (n - 1) // 2)) - 1)
        )
    ).map(lambda pair: build(*pair))


_ENUM_CACHE: dict[int, list[Graph]] = {}


def graphs_of_order(n: int) -> list[Graph]:
    """One representative per isomorphism class, cached across tests."""
    if n not in _ENUM_CACHE:
        _ENUM_CACHE[n] = list(enumerate_graphs(n))
    return _ENUM_CACHE[n]


def pytest_terminal_summary(terminalreporter):
    """Echo the acceptance verdict lines after the regular test summary."""
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture(scope="session")
def bull() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4)])


@pytest.fixture(scope="session")
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


@pytest.fixture(scope="session")
def grotzsch() -> Graph:
    from bullchrome.extremal import mycielski_graph

    return mycielski_graph(3)
