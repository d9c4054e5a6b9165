import pytest

from conjforge import corpus, engine
from conjforge.engine import GenerationConfig
from conjforge.graph import parse_edge_list
from conjforge.repository import (
    CACHE_FILENAME,
    DuplicateGraphError,
    GraphStore,
    StoreError,
)


@pytest.fixture
def regular_db(tmp_path):
    graphs = [corpus.cycle_graph(n) for n in range(3, 9)]
    graphs += [
        corpus.complete_bipartite(3, 3, "k33"),
        corpus.complete_bipartite(4, 4, "k44"),
        corpus.circular_ladder(4, "cube"),
    ]
    corpus.write_corpus(tmp_path, graphs)
    return tmp_path


def test_load(regular_db):
    store = GraphStore.load(regular_db)
    assert len(store.graphs) == 9
    assert store.graphs["cycle_5"].n == 5


def test_load_rejects_disconnected(tmp_path):
    corpus.write_corpus(tmp_path, [corpus.cycle_graph(4)])
    (tmp_path / "broken.txt").write_text("n=4\n0 1\n")
    with pytest.raises(StoreError, match="broken"):
        GraphStore.load(tmp_path)


def test_load_rejects_malformed(tmp_path):
    (tmp_path / "bad.txt").write_text("0 0\n")
    with pytest.raises(StoreError, match="bad"):
        GraphStore.load(tmp_path)


def test_cache_roundtrip_and_transparency(regular_db):
    cold = GraphStore.load(regular_db)
    table_cold = cold.feature_table()
    assert (regular_db / CACHE_FILENAME).exists()
    warm = GraphStore.load(regular_db)
    assert warm.cache  # loaded from the sidecar
    table_warm = warm.feature_table()
    assert table_warm == table_cold


def test_stale_cache_dropped(regular_db):
    store = GraphStore.load(regular_db)
    store.feature_table()
    # rewrite one graph file; its cache rows must be invalidated
    (regular_db / "cycle_3.txt").write_text("n=4\n0 1\n1 2\n2 3\n3 0\n")
    reloaded = GraphStore.load(regular_db)
    assert not any(gid == "cycle_3" for gid, _ in reloaded.cache)
    assert reloaded.invariant_value("cycle_3", "order") == 4


def test_add_counterexample_falsifies(regular_db):
    store = GraphStore.load(regular_db)
    run, _ = engine.generate(
        store.feature_table(), GenerationConfig(target="independence_number")
    )
    target = [
        c
        for c in run
        if c.other == "matching_number"
        and c.bound.m == 1
        and c.bound.b == 0
        and c.hypothesis.conjuncts == ("connected",)
    ]
    assert target
    p3 = parse_edge_list("0 1\n1 2", "path_3")
    report = store.add_counterexample(p3, run)
    assert report.graph_id == "path_3"
    falsified_ids = {e.conjecture_id for e in report.falsified}
    assert target[0].id in falsified_ids
    entry = next(e for e in report.falsified if e.conjecture_id == target[0].id)
    assert entry.lhs == 2 and entry.rhs == 1
    assert report.survived_count == len(run) - len(report.falsified)
    assert (regular_db / "path_3.txt").exists()

    # regeneration drops every falsified conjecture
    run2, _ = engine.generate(
        store.feature_table(), GenerationConfig(target="independence_number")
    )
    ids2 = {c.id for c in run2}
    assert not (falsified_ids & ids2)


def test_add_counterexample_no_violations(regular_db):
    store = GraphStore.load(regular_db)
    run, _ = engine.generate(
        store.feature_table(), GenerationConfig(target="independence_number")
    )
    c12 = corpus.cycle_graph(12)
    report = store.add_counterexample(c12, run)
    assert report.falsified == []
    assert report.survived_count == len(run)


def test_add_duplicate_id_rejected(regular_db):
    store = GraphStore.load(regular_db)
    before = dict(store.graphs)
    with pytest.raises(DuplicateGraphError):
        store.add_counterexample(corpus.cycle_graph(3), [])
    assert store.graphs == before


def test_add_disconnected_rejected(regular_db):
    store = GraphStore.load(regular_db)
    bad = parse_edge_list("n=3\n0 1\n", "frag")
    with pytest.raises(StoreError):
        store.add_counterexample(bad, [])
    assert "frag" not in store.graphs
    assert not (regular_db / "frag.txt").exists()
