"""Post-processing pipeline: touch-number sort, Theo generality filter,
Dalmatian-static novelty filter, and known-results removal.

Every filter only deletes; output is always a subsequence of input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .engine import Conjecture, HeuristicFlags
from .table import FeatureTable, Hypothesis, select_rows


@dataclass(frozen=True)
class KnownResult:
    """A published inequality; generated conjectures implied by it are
    suppressed."""

    target: str
    other: str
    direction: str
    m: Fraction
    b: Fraction
    hypothesis_at_most: Hypothesis
    citation: str


@dataclass
class FilterReport:
    input_count: int
    output_count: int
    removed: list[tuple[str, str]] = field(default_factory=list)

    def merge(self, other: "FilterReport") -> "FilterReport":
        return FilterReport(
            input_count=self.input_count,
            output_count=other.output_count,
            removed=self.removed + other.removed,
        )


def sort_by_touch(conjectures: list[Conjecture]) -> list[Conjecture]:
    """Nonincreasing touch number; ties broken by conjecture id."""
    return sorted(conjectures, key=lambda c: (-c.touch_number, c.id))


def theo(
    conjectures: list[Conjecture], table: FeatureTable
) -> tuple[list[Conjecture], FilterReport]:
    """Within each group sharing one inequality, drop any conjecture whose
    scope is strictly contained in another member's scope; extensionally
    equal scopes keep the fewest-conjunct member."""
    groups: dict[tuple, list[Conjecture]] = {}
    for c in conjectures:
        groups.setdefault(c.inequality_key, []).append(c)
    removed: dict[str, str] = {}
    for members in groups.values():
        for c in members:
            for d in members:
                if d is c:
                    continue
                if c.scope_set < d.scope_set:
                    removed[c.id] = f"theo_subsumed_by {d.id}"
                    break
                if c.scope_set == d.scope_set:
                    ck = (len(c.hypothesis.conjuncts), c.hypothesis.conjuncts)
                    dk = (len(d.hypothesis.conjuncts), d.hypothesis.conjuncts)
                    if dk < ck:
                        removed[c.id] = f"theo_subsumed_by {d.id}"
                        break
    kept = [c for c in conjectures if c.id not in removed]
    report = FilterReport(
        input_count=len(conjectures),
        output_count=len(kept),
        removed=[(cid, reason) for cid, reason in removed.items()],
    )
    return kept, report


def dalmatian_static(
    conjectures: list[Conjecture],
) -> tuple[list[Conjecture], FilterReport]:
    """Sequential scan over a touch-sorted list: a conjecture survives iff
    its equality set contributes a witness not yet seen."""
    kept: list[Conjecture] = []
    removed: list[tuple[str, str]] = []
    witnesses: set[str] = set()
    for i, c in enumerate(conjectures):
        if i == 0 or not (c.equality_set <= witnesses):
            kept.append(c)
            witnesses |= c.equality_set
        else:
            removed.append((c.id, "dalmatian_no_new_witness"))
    return kept, FilterReport(len(conjectures), len(kept), removed)


def remove_known(
    conjectures: list[Conjecture],
    known: list[KnownResult],
    table: FeatureTable,
) -> tuple[list[Conjecture], FilterReport]:
    """Drop conjectures whose inequality matches a known result and whose
    hypothesis scope is contained in the known result's scope."""
    known_scopes = []
    for k in known:
        scope = frozenset(select_rows(table, k.hypothesis_at_most))
        known_scopes.append((k, scope))
    kept: list[Conjecture] = []
    removed: list[tuple[str, str]] = []
    for c in conjectures:
        reason = None
        for k, scope in known_scopes:
            if (
                c.target == k.target
                and c.other == k.other
                and c.bound.direction == k.direction
                and c.bound.m == k.m
                and c.bound.b == k.b
                and c.scope_set <= scope
            ):
                reason = f"known_result {k.citation}"
                break
        if reason is None:
            kept.append(c)
        else:
            removed.append((c.id, reason))
    return kept, FilterReport(len(conjectures), len(kept), removed)


def run_pipeline(
    conjectures: list[Conjecture],
    table: FeatureTable,
    flags: HeuristicFlags,
    known_results: list[KnownResult] | None = None,
) -> tuple[list[Conjecture], FilterReport]:
    """Fixed order: sort, Theo, Dalmatian, known-results removal."""
    current = list(conjectures)
    report = FilterReport(len(current), len(current))
    if flags.sort:
        current = sort_by_touch(current)
    if flags.theo:
        current, r = theo(current, table)
        report = report.merge(r)
    if flags.dalmatian:
        current, r = dalmatian_static(current)
        report = report.merge(r)
    if flags.known_filter and known_results:
        current, r = remove_known(current, known_results, table)
        report = report.merge(r)
    report.output_count = len(current)
    return current, report


def load_known_results(path: str | Path) -> list[KnownResult]:
    try:
        entries = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError(f"bad known-results file {path}: {exc}") from exc
    results = []
    for entry in entries:
        try:
            results.append(
                KnownResult(
                    target=entry["target"],
                    other=entry["other"],
                    direction=entry["direction"],
                    m=Fraction(entry["m"]),
                    b=Fraction(entry["b"]),
                    hypothesis_at_most=Hypothesis(
                        conjuncts=tuple(entry["hypothesis_at_most"])
                    ),
                    citation=entry["citation"],
                )
            )
        except (KeyError, ValueError, TypeError) as exc:
            raise ValueError(f"bad known-results entry {entry!r}: {exc}") from exc
    return results


def default_known_results_path() -> Path:
    return Path(__file__).parent / "data" / "known_results.json"
