"""HTTP front door: JSON API over the generation pipeline and graph store."""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from . import engine, filters, invariants
from .engine import GenerationConfig, HeuristicFlags
from .fitter import DIRECTIONS
from .graph import (
    BOOLEAN_DESCRIPTIONS,
    BOOLEAN_PROPERTIES,
    GraphParseError,
    GraphValidationError,
    parse_edge_list,
    serialize_edge_list,
)
from .repository import DuplicateGraphError, GraphStore, StoreError
from .table import Hypothesis, TableError, select_rows


class HeuristicToggles(BaseModel):
    sort: bool = True
    theo: bool = True
    dalmatian: bool = True
    known_filter: bool = False


class ConjectureRequest(BaseModel):
    target: str
    direction: str = "upper"
    hypothesis_filter: Optional[list[str]] = None
    heuristics: HeuristicToggles = Field(default_factory=HeuristicToggles)
    limit: Optional[int] = Field(default=None, ge=1)


class GraphSubmission(BaseModel):
    id: str
    edge_list: str


def _report_payload(report: filters.FilterReport) -> dict:
    return {
        "input_count": report.input_count,
        "output_count": report.output_count,
        "removed": [{"id": cid, "reason": reason} for cid, reason in report.removed],
    }


def create_app(store: GraphStore, known_results=None) -> FastAPI:
    app = FastAPI(title="conjforge")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    app.state.store = store
    app.state.known_results = known_results or []
    app.state.last_run = []

    @app.get("/api/invariants")
    def list_invariants():
        numeric = [
            {"name": name, "kind": "numeric", "description": invariants.INVARIANT_DESCRIPTIONS[name]}
            for name in invariants.INVARIANTS
        ]
        boolean = [
            {"name": name, "kind": "boolean", "description": BOOLEAN_DESCRIPTIONS[name]}
            for name in BOOLEAN_PROPERTIES
        ]
        return numeric + boolean

    @app.post("/api/conjectures")
    def conjectures(request: ConjectureRequest):
        if request.target not in invariants.INVARIANTS:
            raise HTTPException(400, f"unknown invariant {request.target!r}")
        if request.direction not in DIRECTIONS:
            raise HTTPException(400, f"unknown direction {request.direction!r}")
        if not store.graphs:
            raise HTTPException(409, "empty database")
        table = store.feature_table()
        config = GenerationConfig(
            target=request.target,
            direction=request.direction,
            heuristics=HeuristicFlags(
                sort=request.heuristics.sort,
                theo=request.heuristics.theo,
                dalmatian=request.heuristics.dalmatian,
                known_filter=request.heuristics.known_filter,
            ),
        )
        try:
            run, report = engine.generate(
                table, config, known_results=app.state.known_results
            )
        except TableError as exc:
            raise HTTPException(400, str(exc))
        if request.hypothesis_filter:
            try:
                wanted = frozenset(
                    select_rows(table, Hypothesis(tuple(request.hypothesis_filter)))
                )
            except TableError as exc:
                raise HTTPException(400, str(exc))
            run = [c for c in run if c.scope_set == wanted]
        app.state.last_run = run
        shown = run if request.limit is None else run[: request.limit]
        return {
            "conjectures": [engine.conjecture_to_dict(c) for c in shown],
            "filter_report": _report_payload(report),
            "total": len(run),
        }

    @app.get("/api/graphs")
    def list_graphs():
        return [
            {"id": gid, "n": g.n, "size": g.size}
            for gid, g in sorted(store.graphs.items())
        ]

    @app.get("/api/graphs/{graph_id}")
    def get_graph(graph_id: str):
        g = store.graphs.get(graph_id)
        if g is None:
            raise HTTPException(404, f"no graph {graph_id!r}")
        return {
            "id": g.id,
            "n": g.n,
            "size": g.size,
            "edge_list": serialize_edge_list(g),
        }

    @app.post("/api/graphs", status_code=200)
    def add_graph(submission: GraphSubmission):
        try:
            g = parse_edge_list(submission.edge_list, graph_id=submission.id)
        except (GraphParseError, GraphValidationError) as exc:
            raise HTTPException(422, str(exc))
        try:
            report = store.add_counterexample(g, app.state.last_run)
        except DuplicateGraphError as exc:
            raise HTTPException(409, str(exc))
        except StoreError as exc:
            raise HTTPException(422, str(exc))
        return {
            "graph_id": report.graph_id,
            "falsified": [
                {
                    "conjecture_id": entry.conjecture_id,
                    "statement": entry.statement,
                    "lhs": entry.lhs,
                    "rhs": str(entry.rhs),
                }
                for entry in report.falsified
            ],
            "survived_count": report.survived_count,
        }

    return app
