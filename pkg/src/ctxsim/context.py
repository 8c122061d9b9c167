"""Application contexts: which slots matter and how to compare them.

A context is a partial map from recursion paths to comparison entries.  A
recursion path anchors at a start class and walks relation names, e.g.
``Object`` or ``Object.hasPart``; its entry lists (slot, operation) pairs.
Operations on relations with ``simil`` recurse into the related instances,
so the context must also define the extended path — that closure is
enforced at parse time, which makes "undefined path during recursion"
unreachable by construction.

Document form::

    name: part
    entries:
      - path: {start: Object, relations: []}
        attrs: []
        rels:
          - {name: hasPart, op: simil}
      - path: {start: Object, relations: [hasPart]}
        rels:
          - {name: hasPartCategory, op: inter}
          - {name: hasFunctionality, op: inter}
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

import yaml

from .errors import ParseError, SchemaValidationError
from .ontology import Ontology


class Operation(enum.Enum):
    """The three set-comparison operations a context may request."""

    COUNT = "count"
    INTER = "inter"
    SIMIL = "simil"

    @classmethod
    def parse(cls, token: Any) -> "Operation":
        try:
            return cls(str(token).lower())
        except ValueError:
            raise ParseError(f"unknown operation {token!r} (expected count|inter|simil)") from None


@dataclass(frozen=True)
class RecursionPath:
    """A start class plus the chain of relations walked so far."""

    start: str
    relations: tuple[str, ...] = ()

    def extend(self, relation: str) -> "RecursionPath":
        return RecursionPath(self.start, self.relations + (relation,))

    @property
    def label(self) -> str:
        return ".".join((self.start,) + self.relations)

    def __str__(self) -> str:
        return f"[{self.label}]"


@dataclass(frozen=True)
class ContextEntry:
    """(slot, operation) pairs to evaluate at one recursion path."""

    attribute_ops: tuple[tuple[str, Operation], ...] = ()
    relation_ops: tuple[tuple[str, Operation], ...] = ()


@dataclass(frozen=True)
class ApplicationContext:
    """Named, validated partial function from paths to entries."""

    name: str
    entries: Mapping[RecursionPath, ContextEntry]

    def lookup(self, path: RecursionPath) -> ContextEntry | None:
        """Entry at the path, or None — the map is partial."""
        return self.entries.get(path)

    def start_paths(self) -> list[RecursionPath]:
        """The zero-length paths, i.e. the classes queries may anchor at."""
        return [p for p in self.entries if not p.relations]


def terminal_class(onto: Ontology, path: RecursionPath) -> str:
    """Class reached by walking the path's relation chain from its start.

    Raises SchemaValidationError when the start class is unknown or a
    chain element is not an effective relation of the preceding class.
    """
    if path.start not in onto.classes:
        raise SchemaValidationError(f"path {path}: unknown start class {path.start!r}")
    current = path.start
    for relation in path.relations:
        rels = onto.effective_slots(current)[1]
        decl = rels.get(relation)
        if decl is None:
            raise SchemaValidationError(
                f"path {path}: {relation!r} is not an effective relation of class {current!r}")
        current = decl.target
    return current


def validate_context(context: ApplicationContext, onto: Ontology) -> None:
    """Check every context invariant against the ontology."""
    if not context.entries:
        raise SchemaValidationError(f"context {context.name!r} defines no entries")
    for path, entry in context.entries.items():
        cls = terminal_class(onto, path)
        attrs, rels = onto.effective_slots(cls)
        seen: set[str] = set()
        for name, _op in entry.attribute_ops:
            if name in seen:
                raise SchemaValidationError(
                    f"context {context.name!r}, path {path}: duplicate term {name!r}")
            seen.add(name)
            if name not in attrs:
                raise SchemaValidationError(
                    f"context {context.name!r}, path {path}: "
                    f"{name!r} is not an effective attribute of class {cls!r}")
        for name, op in entry.relation_ops:
            if name in seen:
                raise SchemaValidationError(
                    f"context {context.name!r}, path {path}: duplicate term {name!r}")
            seen.add(name)
            if name not in rels:
                raise SchemaValidationError(
                    f"context {context.name!r}, path {path}: "
                    f"{name!r} is not an effective relation of class {cls!r}")
            if op is Operation.SIMIL and context.lookup(path.extend(name)) is None:
                raise SchemaValidationError(
                    f"context {context.name!r}: simil on relation {name!r} at {path} "
                    f"requires an entry at {path.extend(name)} (recursion closure)")


# ----------------------------------------------------------------------
# document parsing / serialization
# ----------------------------------------------------------------------

def context_from_document(doc: Any, onto: Ontology, source: str = "<document>") -> ApplicationContext:
    """Build and validate a context from already-parsed document data."""
    if not isinstance(doc, dict):
        raise ParseError("context document must be a mapping", source)
    name = doc.get("name")
    if not isinstance(name, str) or not name:
        raise ParseError("context document needs a non-empty 'name'", source)
    raw_entries = doc.get("entries")
    if not isinstance(raw_entries, list):
        raise ParseError(f"context {name!r}: 'entries' must be a list", source)
    entries: dict[RecursionPath, ContextEntry] = {}
    for raw in raw_entries:
        if not isinstance(raw, dict):
            raise ParseError(f"context {name!r}: entry must be a mapping", source)
        path = _parse_path(raw.get("path"), name, source)
        if path in entries:
            raise SchemaValidationError(
                f"context {name!r}: duplicate entry for path {path} (AC must be a partial function)")
        entries[path] = ContextEntry(
            attribute_ops=_parse_terms(raw.get("attrs"), name, source),
            relation_ops=_parse_terms(raw.get("rels"), name, source),
        )
    context = ApplicationContext(name=name, entries=entries)
    validate_context(context, onto)
    return context


def parse_context(text: str, onto: Ontology, source: str = "<string>") -> ApplicationContext:
    """Parse and validate a context document from YAML text."""
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        if mark is not None:
            raise ParseError(str(getattr(exc, "problem", exc)), source,
                             line=mark.line + 1, column=mark.column + 1) from exc
        raise ParseError(str(exc), source) from exc
    return context_from_document(doc, onto, source)


def load_context(path: str | Path, onto: Ontology) -> ApplicationContext:
    """Parse and validate the context document at *path*."""
    path = Path(path)
    return parse_context(path.read_text(encoding="utf-8"), onto, source=str(path))


def context_to_document(context: ApplicationContext) -> dict[str, Any]:
    """Plain-data form, re-parseable by context_from_document."""
    entries = []
    for path, entry in context.entries.items():
        entries.append({
            "path": {"start": path.start, "relations": list(path.relations)},
            "attrs": [{"name": n, "op": op.value} for n, op in entry.attribute_ops],
            "rels": [{"name": n, "op": op.value} for n, op in entry.relation_ops],
        })
    return {"name": context.name, "entries": entries}


def dump_context(context: ApplicationContext) -> str:
    """Serialize a context back to its YAML document form."""
    return yaml.safe_dump(context_to_document(context), sort_keys=False, allow_unicode=True)


def _parse_path(raw: Any, ctx_name: str, source: str) -> RecursionPath:
    if not isinstance(raw, dict) or "start" not in raw:
        raise ParseError(f"context {ctx_name!r}: entry path needs {{start, relations}}", source)
    start = raw["start"]
    if not isinstance(start, str):
        raise ParseError(f"context {ctx_name!r}: path start must be a class name", source)
    relations = raw.get("relations") or []
    if not isinstance(relations, list) or not all(isinstance(r, str) for r in relations):
        raise ParseError(f"context {ctx_name!r}: path relations must be a list of names", source)
    return RecursionPath(start=start, relations=tuple(relations))


def _parse_terms(raw: Any, ctx_name: str, source: str) -> tuple[tuple[str, Operation], ...]:
    if raw is None:
        return ()
    if not isinstance(raw, list):
        raise ParseError(f"context {ctx_name!r}: term list must be a list", source)
    terms = []
    for item in raw:
        if not isinstance(item, dict) or "name" not in item or "op" not in item:
            raise ParseError(f"context {ctx_name!r}: term must be {{name, op}}", source)
        terms.append((str(item["name"]), Operation.parse(item["op"])))
    return tuple(terms)
