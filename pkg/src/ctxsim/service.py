"""HTTP face of the engine: a small JSON API over one loaded ontology.

The ontology is immutable for the process lifetime.  The only mutable
state is the context registry: uploading a context document registers or
atomically replaces it under its own name, which is what lets a browsing
user reformulate similarity criteria and re-rank on the fly.  Reads
capture a context reference at request start, so an in-flight ranking is
never affected by a concurrent upload.

Status codes: 400 for malformed requests, 404 for unknown instance ids or
context names, 422 for context documents that fail validation.
"""

from __future__ import annotations

import threading
from pathlib import Path
from typing import Any

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import render
from .context import ApplicationContext, context_from_document
from .engine import EngineConfig, SimilarityEngine
from .errors import ContextMismatchError, CtxsimError, UnknownIdError
from .ontology import Ontology


class ContextRegistry:
    """Named contexts with atomic single-writer replacement."""

    def __init__(self, contexts: dict[str, ApplicationContext] | None = None):
        self._lock = threading.Lock()
        self._contexts = dict(contexts or {})

    def get(self, name: str) -> ApplicationContext | None:
        return self._contexts.get(name)

    def put(self, context: ApplicationContext) -> None:
        with self._lock:
            updated = dict(self._contexts)
            updated[context.name] = context
            self._contexts = updated

    def all(self) -> list[ApplicationContext]:
        snapshot = self._contexts
        return [snapshot[name] for name in sorted(snapshot)]


def create_app(onto: Ontology, contexts: dict[str, ApplicationContext] | None = None,
               config: EngineConfig = EngineConfig(),
               ui_dir: str | Path | None = None) -> FastAPI:
    """Build the service around one ontology and an initial context set."""
    engine = SimilarityEngine(onto, config)
    registry = ContextRegistry(contexts)
    app = FastAPI(title="ctxsim", docs_url=None, redoc_url=None)
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(RequestValidationError)
    async def malformed_request(_request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    def get_context(name: str) -> ApplicationContext:
        context = registry.get(name)
        if context is None:
            raise HTTPException(status_code=404, detail=f"unknown context: {name!r}")
        return context

    def run(fn, *args) -> Any:
        try:
            return fn(*args)
        except UnknownIdError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        except ContextMismatchError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc

    @app.get("/api/instances")
    def list_instances():
        return {"instances": render.instances_payload(onto)}

    @app.get("/api/instances/{instance_id}")
    def get_instance(instance_id: str):
        inst = onto.instances.get(instance_id)
        if inst is None:
            raise HTTPException(status_code=404, detail=f"unknown instance: {instance_id!r}")
        return render.instance_payload(inst)

    @app.get("/api/contexts")
    def list_contexts():
        return {"contexts": [render.context_payload(c) for c in registry.all()]}

    @app.post("/api/contexts")
    def upload_context(document: dict):
        try:
            context = context_from_document(document, onto, source="<upload>")
        except CtxsimError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        registry.put(context)
        return {"name": context.name, "context": render.context_payload(context)}

    @app.get("/api/similarity")
    def similarity(a: str, b: str, context: str):
        ctx = get_context(context)
        score = run(engine.sim, ctx, a, b)
        return render.similarity_payload(score)

    @app.get("/api/rank")
    def rank(query: str, context: str):
        ctx = get_context(context)
        ranking = run(engine.rank, ctx, query)
        return render.ranking_payload(ranking)

    @app.get("/api/matrix")
    def matrix(context: str):
        ctx = get_context(context)
        return render.matrix_payload(run(engine.matrix, ctx))

    @app.get("/api/matrix.pgm")
    def matrix_pgm(context: str):
        ctx = get_context(context)
        body = render.matrix_to_pgm(run(engine.matrix, ctx))
        return Response(content=body, media_type="image/x-portable-graymap")

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app
