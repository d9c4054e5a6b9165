"""Conjecture generation: sweep every hypothesis and invariant pair, fit a
sharp bound on the restricted rows, and post-process with the heuristic
filter pipeline."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import fitter
from .fitter import UPPER, BoundingFunction, FitError
from .table import FeatureTable, Hypothesis, TableError, select_rows

NOT_IN_SCOPE = "not_in_scope"
HOLDS_STRICT = "holds_strict"
HOLDS_EQUAL = "holds_equal"
VIOLATED = "violated"


@dataclass(frozen=True)
class Conjecture:
    id: str
    hypothesis: Hypothesis
    target: str
    other: str
    bound: BoundingFunction
    touch_number: int
    equality_set: frozenset[str]
    scope_set: frozenset[str]

    @property
    def inequality_key(self) -> tuple:
        return (self.target, self.other, self.bound.direction, self.bound.m, self.bound.b)


@dataclass
class HeuristicFlags:
    sort: bool = True
    theo: bool = True
    dalmatian: bool = True
    known_filter: bool = False


@dataclass
class GenerationConfig:
    target: str
    direction: str = UPPER
    hypothesis_depth: int = 2
    min_scope: int = 3
    heuristics: HeuristicFlags = field(default_factory=HeuristicFlags)

    def __post_init__(self):
        if self.min_scope < 1:
            raise ValueError("min_scope must be >= 1")
        if self.hypothesis_depth not in (1, 2):
            raise ValueError("hypothesis_depth must be 1 or 2")


def conjecture_id(
    hypothesis: Hypothesis, target: str, other: str, bound: BoundingFunction
) -> str:
    payload = "|".join(
        [
            ",".join(hypothesis.conjuncts),
            target,
            other,
            bound.direction,
            str(bound.m),
            str(bound.b),
        ]
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:12]


def enumerate_hypotheses(table: FeatureTable, depth: int) -> list[Hypothesis]:
    """All conjunctions up to `depth` over the Boolean columns, deduplicated
    extensionally (identical selected-row sets keep the fewest conjuncts;
    the universal `connected` hypothesis wins ties)."""
    names = sorted(table.boolean_columns)
    candidates: list[Hypothesis] = []
    for k in range(1, depth + 1):
        for combo in combinations(names, k):
            candidates.append(Hypothesis(conjuncts=combo))
    by_scope: dict[frozenset[str], Hypothesis] = {}
    for h in candidates:
        scope = frozenset(select_rows(table, h))
        rank = (
            len(h.conjuncts),
            0 if h.conjuncts == ("connected",) else 1,
            h.conjuncts,
        )
        current = by_scope.get(scope)
        if current is None or rank < (
            len(current.conjuncts),
            0 if current.conjuncts == ("connected",) else 1,
            current.conjuncts,
        ):
            by_scope[scope] = h
    return sorted(by_scope.values(), key=lambda h: h.conjuncts)


def generate(
    table: FeatureTable,
    config: GenerationConfig,
    known_results=None,
):
    """Run the full pipeline. Returns (conjectures, FilterReport)."""
    from . import filters  # local import to avoid a cycle

    if config.target not in table.numeric_columns:
        raise TableError(f"target {config.target!r} is not a numeric column")
    if not table.rows:
        raise TableError("empty database")
    target_col = table.numeric_columns[config.target]
    row_index = {gid: i for i, gid in enumerate(table.rows)}

    raw: list[Conjecture] = []
    for hypothesis in enumerate_hypotheses(table, config.hypothesis_depth):
        scope_ids = select_rows(table, hypothesis)
        if len(scope_ids) < config.min_scope:
            continue
        for other, other_col in table.numeric_columns.items():
            if other == config.target:
                continue
            points = [
                (other_col[row_index[gid]], target_col[row_index[gid]])
                for gid in scope_ids
            ]
            try:
                result = fitter.fit(points, config.direction)
            except FitError:
                continue
            if result.touch_count < 1:
                continue
            equality = frozenset(scope_ids[i] for i in result.touch_set)
            raw.append(
                Conjecture(
                    id=conjecture_id(hypothesis, config.target, other, result.bound),
                    hypothesis=hypothesis,
                    target=config.target,
                    other=other,
                    bound=result.bound,
                    touch_number=result.touch_count,
                    equality_set=equality,
                    scope_set=frozenset(scope_ids),
                )
            )

    return filters.run_pipeline(
        raw, table, config.heuristics, known_results=known_results
    )


def evaluate(conjecture: Conjecture, row: dict[str, int | bool]) -> str:
    """Classify a table row against a conjecture."""
    for conjunct in conjecture.hypothesis.conjuncts:
        if conjunct not in row:
            raise TableError(f"row missing column {conjunct!r}")
        if not row[conjunct]:
            return NOT_IN_SCOPE
    for col in (conjecture.target, conjecture.other):
        if col not in row:
            raise TableError(f"row missing column {col!r}")
    lhs = Fraction(int(row[conjecture.target]))
    rhs = conjecture.bound.evaluate(int(row[conjecture.other]))
    if lhs == rhs:
        return HOLDS_EQUAL
    if conjecture.bound.direction == UPPER:
        return HOLDS_STRICT if lhs < rhs else VIOLATED
    return HOLDS_STRICT if lhs > rhs else VIOLATED


def _format_term(m: Fraction, other: str, b: Fraction) -> str:
    if m == 0:
        return str(b)
    if m == 1:
        expr = other
    elif m == -1:
        expr = f"-{other}"
    else:
        expr = f"{m}·{other}"
    if b > 0:
        expr += f" + {b}"
    elif b < 0:
        expr += f" - {-b}"
    return expr


def conjecture_statement(conjecture: Conjecture) -> str:
    names = [c for c in conjecture.hypothesis.conjuncts if c != "connected"]
    hyp = " and ".join(["connected", *names])
    rel = "≤" if conjecture.bound.direction == UPPER else "≥"
    expr = _format_term(conjecture.bound.m, conjecture.other, conjecture.bound.b)
    return (
        f"If G is {hyp}, then {conjecture.target} {rel} {expr}, "
        "and this bound is sharp."
    )


def conjecture_to_dict(conjecture: Conjecture) -> dict:
    return {
        "id": conjecture.id,
        "statement": conjecture_statement(conjecture),
        "hypothesis": list(conjecture.hypothesis.conjuncts),
        "target": conjecture.target,
        "other": conjecture.other,
        "direction": conjecture.bound.direction,
        "m": str(conjecture.bound.m),
        "b": str(conjecture.bound.b),
        "touch_number": conjecture.touch_number,
        "equality_set": sorted(conjecture.equality_set),
        "scope_set": sorted(conjecture.scope_set),
    }


def conjectures_to_json(conjectures: list[Conjecture]) -> str:
    return json.dumps([conjecture_to_dict(c) for c in conjectures], indent=2)


def conjecture_from_dict(data: dict) -> Conjecture:
    bound = BoundingFunction(
        Fraction(data["m"]), Fraction(data["b"]), data["direction"]
    )
    return Conjecture(
        id=data["id"],
        hypothesis=Hypothesis(conjuncts=tuple(data["hypothesis"])),
        target=data["target"],
        other=data["other"],
        bound=bound,
        touch_number=data["touch_number"],
        equality_set=frozenset(data["equality_set"]),
        scope_set=frozenset(data["scope_set"]),
    )
