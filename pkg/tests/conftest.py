from __future__ import annotations

import pytest

from kplanar.generators import convex_kn
from kplanar.graph import Drawing, Graph, crossings_from_geometry


@pytest.fixture(scope="session")
def k4():
    return convex_kn(4)


@pytest.fixture(scope="session")
def k6():
    return convex_kn(6)


@pytest.fixture(scope="session")
def k8():
    return convex_kn(8)


@pytest.fixture(scope="session")
def k12():
    return convex_kn(12)


@pytest.fixture()
def path_drawing():
    graph = Graph(3, [(0, 1), (1, 2)])
    return crossings_from_geometry(graph, [(0, 0), (10, 3), (20, 1)])


@pytest.fixture()
def two_disjoint_pairs():
    """Two vertex-disjoint crossing pairs, as a combinatorial drawing."""
    graph = Graph(8, [(0, 1), (2, 3), (4, 5), (6, 7)])
    return Drawing(graph, [(0, 1, 1), (2, 3, 1)])
