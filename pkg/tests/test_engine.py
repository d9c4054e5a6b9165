from fractions import Fraction

import pytest

from conjforge import corpus, engine
from conjforge.engine import (
    HOLDS_EQUAL,
    HOLDS_STRICT,
    NOT_IN_SCOPE,
    VIOLATED,
    Conjecture,
    GenerationConfig,
    HeuristicFlags,
    conjecture_from_dict,
    conjecture_statement,
    conjecture_to_dict,
    evaluate,
    generate,
)
from conjforge.fitter import UPPER, BoundingFunction
from conjforge.table import Hypothesis, TableError, build_table


def make_conjecture(m="1", b="0", other="matching_number", hyp=("cubic",)):
    bound = BoundingFunction(Fraction(m), Fraction(b), UPPER)
    return Conjecture(
        id=engine.conjecture_id(Hypothesis(hyp), "independence_number", other, bound),
        hypothesis=Hypothesis(hyp),
        target="independence_number",
        other=other,
        bound=bound,
        touch_number=1,
        equality_set=frozenset({"k33"}),
        scope_set=frozenset({"k33", "k4"}),
    )


def cubic_corpus():
    return [
        corpus.complete_graph(4),
        corpus.complete_bipartite(3, 3, "k33"),
        corpus.petersen_graph(),
        corpus.circular_ladder(3),
        corpus.circular_ladder(4, "cube"),
    ]


def test_generate_alpha_mu_on_cubic_corpus():
    table = build_table(
        cubic_corpus(),
        ["order", "independence_number", "matching_number"],
        ["connected", "cubic", "regular"],
    )
    run, _ = generate(
        table,
        GenerationConfig(
            target="independence_number",
            direction=UPPER,
            heuristics=HeuristicFlags(dalmatian=False),
        ),
    )
    matches = [
        c
        for c in run
        if c.other == "matching_number" and c.bound.m == 1 and c.bound.b == 0
    ]
    assert matches, "alpha <= mu not rediscovered"
    # witnesses are the cubic graphs with alpha == mu (k33 and the cube;
    # the triangular prism has alpha 2 < mu 3)
    assert {"k33", "cube"} <= matches[0].equality_set
    assert "prism_3" not in matches[0].equality_set


def test_generate_scope_gate():
    table = build_table(
        cubic_corpus() + [corpus.path_graph(4)],
        ["order", "independence_number"],
        ["connected", "has_leaf"],
    )
    run, _ = generate(
        table,
        GenerationConfig(target="independence_number", min_scope=3),
    )
    # has_leaf selects only path_4: below min_scope, never fitted
    assert all(c.hypothesis.conjuncts != ("has_leaf",) for c in run)


def test_generate_unknown_target():
    table = build_table(cubic_corpus(), ["order", "size"], ["connected"])
    with pytest.raises(TableError):
        generate(table, GenerationConfig(target="independence_number"))


def test_generate_deterministic(seed_table):
    config = GenerationConfig(target="independence_number")
    run1, _ = generate(seed_table, config)
    run2, _ = generate(seed_table, config)
    assert [c.id for c in run1] == [c.id for c in run2]
    assert run1 == run2


def test_generate_soundness(seed_table):
    run, _ = generate(seed_table, GenerationConfig(target="independence_number"))
    assert run
    for c in run:
        equal = set()
        for gid in seed_table.rows:
            verdict = evaluate(c, seed_table.row(gid))
            if gid in c.scope_set:
                assert verdict in (HOLDS_STRICT, HOLDS_EQUAL)
                if verdict == HOLDS_EQUAL:
                    equal.add(gid)
            else:
                assert verdict == NOT_IN_SCOPE
        assert equal == set(c.equality_set)
        assert c.touch_number == len(c.equality_set) >= 1


def test_evaluate_cases():
    c = make_conjecture()
    p3_row = {
        "cubic": False,
        "independence_number": 2,
        "matching_number": 1,
    }
    assert evaluate(c, p3_row) == NOT_IN_SCOPE
    k33_row = {"cubic": True, "independence_number": 3, "matching_number": 3}
    assert evaluate(c, k33_row) == HOLDS_EQUAL
    loose = make_conjecture(hyp=("connected",))
    assert evaluate(loose, {**p3_row, "connected": True}) == VIOLATED


def test_statement_rendering():
    assert conjecture_statement(make_conjecture()) == (
        "If G is connected and cubic, then independence_number ≤ "
        "matching_number, and this bound is sharp."
    )
    c = make_conjecture(m="3/2", other="total_domination_number")
    assert "independence_number ≤ 3/2·total_domination_number" in conjecture_statement(c)
    c = make_conjecture(m="1", b="-1", other="order", hyp=("connected",))
    assert "independence_number ≤ order - 1" in conjecture_statement(c)
    assert conjecture_statement(c).startswith("If G is connected, then")


def test_json_roundtrip():
    c = make_conjecture(m="3/2", b="-2/3")
    data = conjecture_to_dict(c)
    assert data["m"] == "3/2" and data["b"] == "-2/3"
    assert conjecture_from_dict(data) == c


def test_adding_graph_never_revives_violated_conjecture(seed_store, seed_table):
    # regeneration on a superset corpus emits no conjecture violated by any row
    run, _ = generate(seed_table, GenerationConfig(target="independence_number"))
    for c in run:
        for gid in seed_table.rows:
            assert evaluate(c, seed_table.row(gid)) != VIOLATED
