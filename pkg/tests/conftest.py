import random

import pytest

from conjforge import corpus
from conjforge.graph import Graph, is_connected
from conjforge.repository import GraphStore


@pytest.fixture
def p3():
    return corpus.path_graph(3)


@pytest.fixture
def k4():
    return corpus.complete_graph(4)


@pytest.fixture
def petersen():
    return corpus.petersen_graph()


@pytest.fixture(scope="session")
def seed_store(tmp_path_factory):
    root = tmp_path_factory.mktemp("seed-db")
    corpus.write_corpus(root)
    return GraphStore.load(root)


@pytest.fixture(scope="session")
def seed_table(seed_store):
    return seed_store.feature_table()


def random_connected_graph(rng: random.Random, n: int, graph_id: str = "r") -> Graph:
    """Rejection-sample a connected graph on n vertices."""
    while True:
        p = rng.uniform(0.25, 0.85)
        edges = {
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < p
        }
        g = Graph(graph_id, n, frozenset(edges))
        if n == 1 or (g.size > 0 and is_connected(g)):
            return g
