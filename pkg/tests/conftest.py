import itertools

import pytest

from almostplanar.graph import Graph


@pytest.fixture(scope="session")
def k4() -> Graph:
    return Graph.from_edges(4, itertools.combinations(range(1, 5), 2))


@pytest.fixture(scope="session")
def k5() -> Graph:
    return Graph.from_edges(5, itertools.combinations(range(1, 6), 2))


@pytest.fixture(scope="session")
def k6() -> Graph:
    return Graph.from_edges(6, itertools.combinations(range(1, 7), 2))


@pytest.fixture(scope="session")
def k33() -> Graph:
    return Graph.from_edges(6, [(u, v) for u in (1, 2, 3) for v in (4, 5, 6)])


@pytest.fixture(scope="session")
def petersen() -> Graph:
    outer = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
    inner = [(6, 8), (8, 10), (10, 7), (7, 9), (9, 6)]
    spokes = [(1, 6), (2, 7), (3, 8), (4, 9), (5, 10)]
    return Graph.from_edges(10, outer + inner + spokes)
