"""Feature tables: one row per graph, numeric invariant and Boolean property
columns, with CSV interchange and hypothesis-restricted row selection."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

from . import invariants
from .graph import BOOLEAN_PROPERTIES, Graph, evaluate_boolean
from .invariants import InvariantDomainError


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class Hypothesis:
    """Conjunction of Boolean property columns."""

    conjuncts: tuple[str, ...]

    def __post_init__(self):
        if not self.conjuncts:
            raise TableError("hypothesis needs at least one conjunct")
        if len(set(self.conjuncts)) != len(self.conjuncts):
            raise TableError(f"duplicate conjuncts in {self.conjuncts}")
        object.__setattr__(self, "conjuncts", tuple(sorted(self.conjuncts)))

    @property
    def display_name(self) -> str:
        return " and ".join(self.conjuncts)


@dataclass
class FeatureTable:
    rows: list[str]
    numeric_columns: dict[str, list[int]] = field(default_factory=dict)
    boolean_columns: dict[str, list[bool]] = field(default_factory=dict)

    def __post_init__(self):
        for name, col in list(self.numeric_columns.items()) + list(
            self.boolean_columns.items()
        ):
            if len(col) != len(self.rows):
                raise TableError(
                    f"column {name!r} has {len(col)} values for {len(self.rows)} rows"
                )

    def row(self, graph_id: str) -> dict[str, int | bool]:
        idx = self.rows.index(graph_id)
        out: dict[str, int | bool] = {}
        for name, col in self.numeric_columns.items():
            out[name] = col[idx]
        for name, col in self.boolean_columns.items():
            out[name] = col[idx]
        return out


def build_table(
    graphs: list[Graph],
    numeric_roster: list[str],
    boolean_roster: list[str],
) -> FeatureTable:
    if not graphs:
        raise TableError("empty graph database")
    if not numeric_roster or not boolean_roster:
        raise TableError("rosters must be nonempty")
    if len(numeric_roster) < 2:
        raise TableError("need at least two numeric columns for pairwise bounds")
    ordered = sorted(graphs, key=lambda g: g.id)
    if len({g.id for g in ordered}) != len(ordered):
        raise TableError("duplicate graph ids")
    numeric: dict[str, list[int]] = {inv: [] for inv in numeric_roster}
    boolean: dict[str, list[bool]] = {p: [] for p in boolean_roster}
    for g in ordered:
        for inv in numeric_roster:
            try:
                numeric[inv].append(invariants.compute(g, inv))
            except InvariantDomainError as exc:
                raise TableError(f"graph {g.id}, invariant {inv}: {exc}") from exc
        for p in boolean_roster:
            boolean[p].append(evaluate_boolean(g, p))
    return FeatureTable(
        rows=[g.id for g in ordered],
        numeric_columns=numeric,
        boolean_columns=boolean,
    )


def select_rows(table: FeatureTable, hypothesis: Hypothesis) -> list[str]:
    """Graph ids satisfying every conjunct, in table row order."""
    for c in hypothesis.conjuncts:
        if c not in table.boolean_columns:
            raise TableError(f"unknown boolean column {c!r}")
    cols = [table.boolean_columns[c] for c in hypothesis.conjuncts]
    return [
        gid for i, gid in enumerate(table.rows) if all(col[i] for col in cols)
    ]


def write_csv(table: FeatureTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    num_names = list(table.numeric_columns)
    bool_names = list(table.boolean_columns)
    writer.writerow(["graph", *num_names, *bool_names])
    for i, gid in enumerate(table.rows):
        row = [gid]
        row += [str(table.numeric_columns[c][i]) for c in num_names]
        row += ["true" if table.boolean_columns[c][i] else "false" for c in bool_names]
        writer.writerow(row)
    return buf.getvalue()


def read_csv(text: str) -> FeatureTable:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise TableError("empty CSV")
    if not header or header[0] != "graph":
        raise TableError("first column must be `graph`")
    names = header[1:]
    data_rows = [r for r in reader if r]
    if not data_rows:
        raise TableError("CSV has no data rows")
    for r in data_rows:
        if len(r) != len(header):
            raise TableError(
                f"row {r[0] if r else '?'}: expected {len(header)} cells, got {len(r)}"
            )
    rows = [r[0] for r in data_rows]
    numeric: dict[str, list[int]] = {}
    boolean: dict[str, list[bool]] = {}
    for j, name in enumerate(names, start=1):
        cells = [r[j] for r in data_rows]
        if all(c in ("true", "false") for c in cells):
            boolean[name] = [c == "true" for c in cells]
        else:
            values = []
            for c in cells:
                try:
                    v = int(c)
                except ValueError:
                    raise TableError(f"column {name!r}: bad cell {c!r}")
                if v < 0:
                    raise TableError(f"column {name!r}: negative value {v}")
                values.append(v)
            numeric[name] = values
    return FeatureTable(rows=rows, numeric_columns=numeric, boolean_columns=boolean)


def default_rosters() -> tuple[list[str], list[str]]:
    return list(invariants.INVARIANTS), list(BOOLEAN_PROPERTIES)
