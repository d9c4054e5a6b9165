"""Graph database persistence: edge-list directory, invariant cache sidecar,
and counterexample ingestion with falsification reporting."""

from __future__ import annotations

import csv
import hashlib
import io
import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import invariants
from .engine import VIOLATED, Conjecture, evaluate
from .graph import (
    BOOLEAN_PROPERTIES,
    Graph,
    GraphParseError,
    GraphValidationError,
    evaluate_boolean,
    is_connected,
    parse_edge_list,
    serialize_edge_list,
)
from .table import FeatureTable

CACHE_FILENAME = "invariants.cache.csv"


class StoreError(ValueError):
    pass


class DuplicateGraphError(StoreError):
    pass


@dataclass
class FalsificationEntry:
    conjecture_id: str
    statement: str
    lhs: int
    rhs: Fraction


@dataclass
class FalsificationReport:
    graph_id: str
    falsified: list[FalsificationEntry]
    survived_count: int


def _content_hash(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass
class GraphStore:
    root: Path
    graphs: dict[str, Graph] = field(default_factory=dict)
    hashes: dict[str, str] = field(default_factory=dict)
    cache: dict[tuple[str, str], int] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @classmethod
    def load(cls, root: str | Path) -> "GraphStore":
        root = Path(root)
        if not root.is_dir():
            raise StoreError(f"database directory {root} does not exist")
        store = cls(root=root)
        for path in sorted(root.glob("*.txt")):
            text = path.read_text()
            try:
                g = parse_edge_list(text, graph_id=path.stem)
            except (GraphParseError, GraphValidationError) as exc:
                raise StoreError(f"{path.name}: {exc}") from exc
            if g.n < 1:
                raise StoreError(f"{path.name}: empty graph not admitted")
            if not is_connected(g):
                raise StoreError(f"{path.name}: disconnected graph not admitted")
            store.graphs[g.id] = g
            store.hashes[g.id] = _content_hash(text)
        store._load_cache()
        return store

    def _cache_path(self) -> Path:
        return self.root / CACHE_FILENAME

    def _load_cache(self):
        path = self._cache_path()
        if not path.exists():
            return
        with path.open(newline="") as fh:
            for row in csv.reader(fh):
                if not row or row[0] == "graph":
                    continue
                gid, content_hash, inv, value = row
                # drop stale or orphaned entries
                if self.hashes.get(gid) != content_hash:
                    continue
                if inv not in invariants.INVARIANTS:
                    continue
                self.cache[(gid, inv)] = int(value)

    def save_cache(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["graph", "hash", "invariant", "value"])
        for (gid, inv), value in sorted(self.cache.items()):
            if gid in self.hashes:
                writer.writerow([gid, self.hashes[gid], inv, value])
        tmp = self._cache_path().with_suffix(".tmp")
        tmp.write_text(buf.getvalue())
        os.replace(tmp, self._cache_path())

    def invariant_value(self, graph_id: str, inv: str) -> int:
        key = (graph_id, inv)
        if key in self.cache:
            return self.cache[key]
        value = invariants.compute(self.graphs[graph_id], inv)
        with self._lock:
            self.cache[key] = value
        return value

    def feature_table(
        self,
        numeric_roster: list[str] | None = None,
        boolean_roster: list[str] | None = None,
    ) -> FeatureTable:
        if not self.graphs:
            raise StoreError("empty database")
        numeric_roster = numeric_roster or list(invariants.INVARIANTS)
        boolean_roster = boolean_roster or list(BOOLEAN_PROPERTIES)
        ids = sorted(self.graphs)
        numeric = {
            inv: [self.invariant_value(gid, inv) for gid in ids]
            for inv in numeric_roster
        }
        boolean = {
            prop: [evaluate_boolean(self.graphs[gid], prop) for gid in ids]
            for prop in boolean_roster
        }
        self.save_cache()
        return FeatureTable(rows=ids, numeric_columns=numeric, boolean_columns=boolean)

    def graph_row(self, g: Graph) -> dict[str, int | bool]:
        row: dict[str, int | bool] = {
            inv: invariants.compute(g, inv) for inv in invariants.INVARIANTS
        }
        for prop in BOOLEAN_PROPERTIES:
            row[prop] = evaluate_boolean(g, prop)
        return row

    def add_counterexample(
        self, g: Graph, current_run: list[Conjecture]
    ) -> FalsificationReport:
        """Persist a new graph and report which run conjectures it violates.
        A failed add leaves directory, graphs, and cache unchanged."""
        if g.id in self.graphs:
            raise DuplicateGraphError(f"graph id {g.id!r} already in database")
        if g.n < 1:
            raise StoreError("empty graph not admitted")
        if not is_connected(g):
            raise StoreError(f"graph {g.id!r} is disconnected")

        row = self.graph_row(g)
        falsified = []
        for c in current_run:
            if evaluate(c, row) == VIOLATED:
                from .engine import conjecture_statement

                falsified.append(
                    FalsificationEntry(
                        conjecture_id=c.id,
                        statement=conjecture_statement(c),
                        lhs=int(row[c.target]),
                        rhs=c.bound.evaluate(int(row[c.other])),
                    )
                )

        text = serialize_edge_list(g)
        with self._lock:
            tmp = self.root / f".{g.id}.txt.tmp"
            tmp.write_text(text)
            os.replace(tmp, self.root / f"{g.id}.txt")
            self.graphs[g.id] = g
            self.hashes[g.id] = _content_hash(text)
            for inv in invariants.INVARIANTS:
                self.cache[(g.id, inv)] = int(row[inv])
        self.save_cache()
        return FalsificationReport(
            graph_id=g.id,
            falsified=falsified,
            survived_count=len(current_run) - len(falsified),
        )
