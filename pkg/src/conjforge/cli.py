"""Command-line interface: build-table, conjecture, add-graph, serve, init-db."""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import corpus, engine, filters, table as table_mod
from .engine import GenerationConfig, HeuristicFlags
from .graph import GraphParseError, GraphValidationError, parse_edge_list
from .repository import GraphStore, StoreError

_DIRECTIONS = {"up": "upper", "upper": "upper", "down": "lower", "lower": "lower"}


def _load_store(db: str | None) -> GraphStore:
    if not db:
        raise click.ClickException(
            "no database directory; pass --db or set CONJFORGE_DB"
        )
    try:
        return GraphStore.load(db)
    except StoreError as exc:
        raise click.ClickException(str(exc))


db_option = click.option(
    "--db",
    envvar="CONJFORGE_DB",
    type=click.Path(file_okay=False),
    help="graph database directory (default: $CONJFORGE_DB)",
)


@click.group()
def main():
    """Automated conjecturing over a database of small connected graphs."""


@main.command("init-db")
@db_option
def init_db(db):
    """Materialize the seed corpus into a database directory."""
    if not db:
        raise click.ClickException("pass --db or set CONJFORGE_DB")
    count = corpus.write_corpus(db)
    click.echo(f"wrote {count} graphs to {db}")


@main.command("build-table")
@db_option
@click.option("--out", type=click.Path(dir_okay=False), required=True)
def build_table(db, out):
    """Compute the invariant/property feature table and write it as CSV."""
    store = _load_store(db)
    table = store.feature_table()
    Path(out).write_text(table_mod.write_csv(table))
    click.echo(f"wrote {len(table.rows)} rows to {out}")


def _run_generation(store, target, direction, no_theo, no_dalmatian, known):
    table = store.feature_table()
    known_results = filters.load_known_results(known) if known else None
    config = GenerationConfig(
        target=target,
        direction=direction,
        heuristics=HeuristicFlags(
            theo=not no_theo,
            dalmatian=not no_dalmatian,
            known_filter=known is not None,
        ),
    )
    try:
        return engine.generate(table, config, known_results=known_results)
    except table_mod.TableError as exc:
        raise click.ClickException(str(exc))


@main.command()
@db_option
@click.option("--target", required=True)
@click.option(
    "--direction",
    default="upper",
    type=click.Choice(sorted(_DIRECTIONS)),
)
@click.option("--hypothesis", help="comma-separated conjuncts to restrict output")
@click.option("--no-theo", is_flag=True)
@click.option("--no-dalmatian", is_flag=True)
@click.option("--known", type=click.Path(exists=True), help="known-results JSON; enables the known filter")
@click.option("--json", "as_json", is_flag=True, help="JSON output (default: text)")
@click.option("--text", "as_text", is_flag=True, help="human-readable output")
@click.option("--limit", type=click.IntRange(min=1))
def conjecture(db, target, direction, hypothesis, no_theo, no_dalmatian, known, as_json, as_text, limit):
    """Generate, sort, and filter conjectures for a target invariant."""
    store = _load_store(db)
    run, report = _run_generation(
        store, target, _DIRECTIONS[direction], no_theo, no_dalmatian, known
    )
    if hypothesis:
        wanted = tuple(sorted(h.strip() for h in hypothesis.split(",")))
        table = store.feature_table()
        scope = frozenset(
            table_mod.select_rows(table, table_mod.Hypothesis(wanted))
        )
        run = [c for c in run if c.scope_set == scope]
    if limit:
        run = run[:limit]
    if as_json:
        click.echo(engine.conjectures_to_json(run))
    else:
        for i, c in enumerate(run, start=1):
            click.echo(
                f"{i}. {engine.conjecture_statement(c)} "
                f"[touch {c.touch_number}]"
            )
        click.echo(
            f"-- {len(run)} conjectures "
            f"({report.input_count} generated, {len(report.removed)} filtered)"
        )


@main.command("add-graph")
@db_option
@click.option("--file", "path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--id", "graph_id", required=True)
@click.option("--target", default="independence_number", show_default=True)
@click.option("--direction", default="upper", type=click.Choice(sorted(_DIRECTIONS)))
def add_graph(db, path, graph_id, target, direction):
    """Ingest a counterexample and report which fresh-run conjectures it
    falsifies."""
    store = _load_store(db)
    run, _ = _run_generation(
        store, target, _DIRECTIONS[direction], False, False, None
    )
    try:
        g = parse_edge_list(Path(path).read_text(), graph_id=graph_id)
        report = store.add_counterexample(g, run)
    except (GraphParseError, GraphValidationError, StoreError) as exc:
        raise click.ClickException(str(exc))
    click.echo(f"added {report.graph_id}")
    for entry in report.falsified:
        click.echo(
            f"falsified {entry.conjecture_id}: {entry.statement} "
            f"({entry.lhs} vs {entry.rhs})"
        )
    click.echo(
        f"{len(report.falsified)} falsified, {report.survived_count} survived"
    )


@main.command()
@db_option
@click.option("--port", default=8080, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--known", type=click.Path(exists=True))
def serve(db, port, host, known):
    """Start the HTTP API."""
    import uvicorn

    from .service import create_app

    store = _load_store(db)
    known_results = filters.load_known_results(known) if known else None
    uvicorn.run(create_app(store, known_results), host=host, port=port)


if __name__ == "__main__":
    sys.exit(main())
