"""Command-line interface: ctxsim rank|matrix|validate|serve.

The bundled container dataset is the default ontology; ``--context``
accepts a file path, or the bare name of a bundled context file
(``part.ctx`` / ``usage.ctx``) when no such file exists locally.

Exit codes: 1 for parse/validation failures, 2 for unknown ids or
context names.  ``CTXSIM_LOG`` sets the log level.
"""

from __future__ import annotations

import json
import logging
import os
import sys
from pathlib import Path

import click

from . import render
from .casestudy import data_path
from .context import ApplicationContext, load_context
from .engine import SimilarityEngine
from .errors import ContextMismatchError, CtxsimError, UnknownIdError
from .ontology import Ontology, load_ontology

log = logging.getLogger("ctxsim")


def _resolve(path: str) -> Path:
    candidate = Path(path)
    if candidate.exists():
        return candidate
    bundled = data_path(candidate.name)
    if bundled.exists():
        return bundled
    raise click.ClickException(f"no such file: {path}")


def _load_bundle(ontology_path: str, context_paths: tuple[str, ...]) -> tuple[Ontology, dict[str, ApplicationContext]]:
    try:
        onto = load_ontology(_resolve(ontology_path))
        contexts = {}
        for raw in context_paths:
            ctx = load_context(_resolve(raw), onto)
            contexts[ctx.name] = ctx
        return onto, contexts
    except CtxsimError as exc:
        raise click.ClickException(str(exc)) from exc


def _fail_unknown(exc: CtxsimError) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(2)


ontology_option = click.option(
    "--ontology", default="alessi.onto", show_default=True,
    help="Ontology document (path, or bundled file name).")


@click.group()
def main() -> None:
    """Context-dependent semantic similarity over ontology instances."""
    logging.basicConfig(level=os.environ.get("CTXSIM_LOG", "WARNING").upper())


@main.command()
@ontology_option
@click.option("--context", required=True, help="Context document (path or bundled name).")
@click.option("--query", required=True, help="Query instance id.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table",
              show_default=True)
def rank(ontology: str, context: str, query: str, fmt: str) -> None:
    """Rank all other instances of the query's class, best first."""
    onto, contexts = _load_bundle(ontology, (context,))
    engine = SimilarityEngine(onto)
    ctx = next(iter(contexts.values()))
    try:
        ranking = engine.rank(ctx, query)
    except (UnknownIdError, ContextMismatchError) as exc:
        _fail_unknown(exc)
        return
    if fmt == "json":
        click.echo(json.dumps(render.ranking_payload(ranking), indent=2))
    else:
        click.echo(render.ranking_table(ranking), nl=False)


@main.command()
@ontology_option
@click.option("--context", required=True, help="Context document (path or bundled name).")
@click.option("--format", "fmt", type=click.Choice(["csv", "pgm"]), default="csv",
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="Output file (default: standard output).")
def matrix(ontology: str, context: str, fmt: str, out: str | None) -> None:
    """Full directed similarity matrix over all applicable instances."""
    onto, contexts = _load_bundle(ontology, (context,))
    engine = SimilarityEngine(onto)
    grid = engine.matrix(next(iter(contexts.values())))
    if fmt == "csv":
        text = render.matrix_to_csv(grid)
        if out:
            Path(out).write_text(text, encoding="utf-8")
        else:
            click.echo(text, nl=False)
    else:
        body = render.matrix_to_pgm(grid)
        if out:
            Path(out).write_bytes(body)
        else:
            sys.stdout.buffer.write(body)


@main.command()
@ontology_option
@click.option("--context", "context_paths", multiple=True,
              help="Context document(s) to validate against the ontology.")
def validate(ontology: str, context_paths: tuple[str, ...]) -> None:
    """Parse and validate an ontology and any number of contexts."""
    onto, contexts = _load_bundle(ontology, context_paths)
    click.echo(f"OK: {len(onto.classes)} classes, {len(onto.instances)} instances, "
               f"{len(contexts)} context(s)")


@main.command()
@ontology_option
@click.option("--context", "context_paths", multiple=True,
              default=("part.ctx", "usage.ctx"), show_default=True,
              help="Context document(s) to register at startup.")
@click.option("--bind", default="127.0.0.1:8000", show_default=True,
              help="host:port to listen on.")
@click.option("--ui", type=click.Path(exists=True, file_okay=False), default=None,
              help="Directory of static UI files to serve at /.")
def serve(ontology: str, context_paths: tuple[str, ...], bind: str, ui: str | None) -> None:
    """Run the HTTP service exposing the similarity API."""
    import uvicorn

    from .service import create_app

    onto, contexts = _load_bundle(ontology, context_paths)
    host, _, port = bind.rpartition(":")
    if not host or not port.isdigit():
        raise click.ClickException(f"--bind must be host:port, got {bind!r}")
    app = create_app(onto, contexts, ui_dir=ui)
    log.info("serving %d instances on %s", len(onto.instances), bind)
    uvicorn.run(app, host=host, port=int(port),
                log_level=os.environ.get("CTXSIM_LOG", "warning").lower())


if __name__ == "__main__":
    main()
