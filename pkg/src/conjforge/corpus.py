"""Seed corpus: named graph constructors and a curated database of small
connected graphs (complete, bipartite, paths, cycles, cubic families, trees,
and assorted named graphs, all on at most 10 vertices)."""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, serialize_edge_list


def path_graph(n: int, graph_id: str | None = None) -> Graph:
    return Graph(
        id=graph_id or f"path_{n}",
        n=n,
        edges=frozenset((i, i + 1) for i in range(n - 1)),
    )


def cycle_graph(n: int, graph_id: str | None = None) -> Graph:
    edges = {(i, (i + 1) % n) for i in range(n)}
    return Graph(id=graph_id or f"cycle_{n}", n=n, edges=frozenset(edges))


def complete_graph(n: int, graph_id: str | None = None) -> Graph:
    edges = {(i, j) for i in range(n) for j in range(i + 1, n)}
    return Graph(id=graph_id or f"complete_{n}", n=n, edges=frozenset(edges))


def complete_bipartite(a: int, b: int, graph_id: str | None = None) -> Graph:
    edges = {(i, a + j) for i in range(a) for j in range(b)}
    return Graph(id=graph_id or f"bipartite_{a}_{b}", n=a + b, edges=frozenset(edges))


def star_graph(leaves: int, graph_id: str | None = None) -> Graph:
    return complete_bipartite(1, leaves, graph_id or f"star_{leaves}")


def petersen_graph() -> Graph:
    outer = {(i, (i + 1) % 5) for i in range(5)}
    spokes = {(i, i + 5) for i in range(5)}
    inner = {(5 + i, 5 + (i + 2) % 5) for i in range(5)}
    return Graph(id="petersen", n=10, edges=frozenset(outer | spokes | inner))


def circular_ladder(k: int, graph_id: str | None = None) -> Graph:
    """Prism over C_k: two k-cycles joined by rungs; cubic for k >= 3."""
    edges = set()
    for i in range(k):
        edges.add((i, (i + 1) % k))
        edges.add((k + i, k + (i + 1) % k))
        edges.add((i, k + i))
    return Graph(id=graph_id or f"prism_{k}", n=2 * k, edges=frozenset(edges))


def moebius_ladder(k: int, graph_id: str | None = None) -> Graph:
    """Cycle C_{2k} plus all k diagonals; cubic for k >= 2."""
    n = 2 * k
    edges = {(i, (i + 1) % n) for i in range(n)}
    edges |= {(i, i + k) for i in range(k)}
    return Graph(id=graph_id or f"moebius_{n}", n=n, edges=frozenset(edges))


def wheel_graph(rim: int, graph_id: str | None = None) -> Graph:
    edges = {(0, i) for i in range(1, rim + 1)}
    edges |= {(1 + i, 1 + (i + 1) % rim) for i in range(rim)}
    return Graph(id=graph_id or f"wheel_{rim}", n=rim + 1, edges=frozenset(edges))


def _from_edges(graph_id: str, n: int, edges) -> Graph:
    return Graph(id=graph_id, n=n, edges=frozenset(edges))


def seed_corpus() -> list[Graph]:
    graphs: list[Graph] = []
    graphs += [complete_graph(n) for n in range(2, 8)]
    graphs += [
        complete_bipartite(a, b)
        for a in range(1, 5)
        for b in range(a, 5)
        if (a, b) != (1, 1)
    ]
    graphs += [path_graph(n) for n in range(2, 11)]
    graphs += [cycle_graph(n) for n in range(3, 11)]
    graphs += [
        petersen_graph(),
        circular_ladder(3),
        circular_ladder(4, "cube"),
        circular_ladder(5),
        moebius_ladder(4, "wagner"),
        moebius_ladder(5),
    ]
    graphs += [wheel_graph(k) for k in range(4, 9)]
    graphs += [
        _from_edges("paw", 4, [(0, 1), (1, 2), (0, 2), (0, 3)]),
        _from_edges("diamond", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        _from_edges("bull", 5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]),
        _from_edges("house", 5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4)]),
        _from_edges("kite", 5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)]),
        _from_edges("spider_1_2_2", 6, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]),
        _from_edges(
            "double_star_2_3", 7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)]
        ),
        _from_edges("broom_7", 7, [(0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (3, 6)]),
        _from_edges(
            "caterpillar_8",
            8,
            [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (2, 6), (3, 7)],
        ),
    ]
    return graphs


def write_corpus(directory: str | Path, graphs: list[Graph] | None = None) -> int:
    """Materialize a graph database directory (one .txt per graph)."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    graphs = seed_corpus() if graphs is None else graphs
    for g in graphs:
        (directory / f"{g.id}.txt").write_text(serialize_edge_list(g))
    return len(graphs)
