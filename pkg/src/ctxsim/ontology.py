"""Ontology schema and instance store.

An ontology bundles a class forest (single-parent IS-A), per-class slot
declarations (attributes and relations), and an instance store holding the
metadata values.  Everything is immutable after a successful load; the
similarity engine only ever reads from it.

Documents are YAML with a fixed field vocabulary::

    classes:
      - name: Object
        parent: Thing          # optional
        attributes:
          - {name: weightInKilos, kind: number, card: one}
        relations:
          - {name: hasPart, target: FunctionalPart, card: many}
    instances:
      - id: Jug_26
        class: Object
        attrs: {liquidCapacityInLiters: 0.8}
        rels: {hasPart: [Handle_3, Neck_52]}

Attribute kinds are ``bool | number | text``; cardinalities are
``one | many``.  Slots may be absent on an instance (partial metadata is
legal); a ``many`` slot may also be an explicitly empty list, which is a
known-empty value, not an absent one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Mapping

import yaml

from .errors import ParseError, SchemaValidationError, UnknownIdError

VALUE_KINDS = ("bool", "number", "text")
CARDINALITIES = ("one", "many")

_IDENT_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

AttrValue = bool | float | str
AttrSlot = AttrValue | tuple[AttrValue, ...]


@dataclass(frozen=True)
class AttributeDef:
    """Declaration of a literal-valued slot."""

    name: str
    kind: str  # bool | number | text
    card: str = "one"  # one | many


@dataclass(frozen=True)
class RelationDef:
    """Declaration of an instance-valued slot."""

    name: str
    target: str
    card: str = "many"


@dataclass(frozen=True)
class ClassDef:
    """A class with its own (non-inherited) slot declarations."""

    name: str
    parent: str | None = None
    attributes: tuple[AttributeDef, ...] = ()
    relations: tuple[RelationDef, ...] = ()


@dataclass(frozen=True)
class Instance:
    """One described resource: valued attribute and relation slots."""

    id: str
    class_name: str
    attrs: Mapping[str, AttrSlot] = field(default_factory=dict)
    rels: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    def attr_value_set(self, name: str) -> frozenset[AttrValue] | None:
        """Slot value as a set (scalars become singletons); None if absent."""
        if name not in self.attrs:
            return None
        value = self.attrs[name]
        if isinstance(value, tuple):
            return frozenset(value)
        return frozenset((value,))

    def rel_targets(self, name: str) -> frozenset[str] | None:
        """Related instance ids as a set; None if the slot is absent."""
        if name not in self.rels:
            return None
        return frozenset(self.rels[name])


class Ontology:
    """Validated class forest plus instance store.

    Construction validates every invariant: unique class names, acyclic
    single-parent hierarchy, collision-free effective slots, resolvable
    relation targets, and instance values conforming to their declared
    kind and cardinality.  Instances of this class are treated as
    immutable and are safe to share across threads.
    """

    def __init__(self, classes: Iterable[ClassDef], instances: Iterable[Instance]):
        self.classes: dict[str, ClassDef] = {}
        for cls in classes:
            if cls.name in self.classes:
                raise SchemaValidationError(f"duplicate class name: {cls.name!r}")
            self.classes[cls.name] = cls
        self.instances: dict[str, Instance] = {}
        for inst in instances:
            if inst.id in self.instances:
                raise SchemaValidationError(f"duplicate instance id: {inst.id!r}")
            self.instances[inst.id] = inst
        self._effective: dict[str, tuple[dict[str, AttributeDef], dict[str, RelationDef]]] = {}
        self._validate()

    # ------------------------------------------------------------------
    # hierarchy queries
    # ------------------------------------------------------------------

    def class_def(self, name: str) -> ClassDef:
        try:
            return self.classes[name]
        except KeyError:
            raise UnknownIdError("class", name) from None

    def instance(self, instance_id: str) -> Instance:
        try:
            return self.instances[instance_id]
        except KeyError:
            raise UnknownIdError("instance", instance_id) from None

    def ancestry(self, class_name: str) -> list[str]:
        """Chain [class, parent, ..., root]; raises on unknown class."""
        chain = [self.class_def(class_name).name]
        while (parent := self.classes[chain[-1]].parent) is not None:
            chain.append(parent)
        return chain

    def class_depth(self, class_name: str) -> int:
        """Number of IS-A edges from the class to its root (root = 0)."""
        return len(self.ancestry(class_name)) - 1

    def is_subclass_of(self, sub: str, sup: str) -> bool:
        """True when sup is an ancestor-or-self of sub."""
        return sup in self.ancestry(sub)

    def lowest_common_ancestor(self, c1: str, c2: str) -> str | None:
        """Deepest ancestor-or-self of both classes; None across trees."""
        chain1 = self.ancestry(c1)
        seen = set(chain1)
        for name in self.ancestry(c2):
            if name in seen:
                return name
        return None

    def effective_slots(self, class_name: str) -> tuple[dict[str, AttributeDef], dict[str, RelationDef]]:
        """Own plus inherited slot declarations, keyed by name.

        Declarations appear root-first, so the iteration order is stable
        across calls and store permutations.
        """
        if class_name not in self._effective:
            cls = self.class_def(class_name)
            attrs: dict[str, AttributeDef] = {}
            rels: dict[str, RelationDef] = {}
            for name in reversed(self.ancestry(class_name)):
                level = self.classes[name]
                for attr in level.attributes:
                    attrs[attr.name] = attr
                for rel in level.relations:
                    rels[rel.name] = rel
            self._effective[cls.name] = (attrs, rels)
        return self._effective[class_name]

    def instances_of(self, class_name: str) -> list[Instance]:
        """Instances of the class or any descendant, ordered by id."""
        self.class_def(class_name)
        ordered = (self.instances[iid] for iid in sorted(self.instances))
        return [inst for inst in ordered if self.is_subclass_of(inst.class_name, class_name)]

    # ------------------------------------------------------------------
    # validation
    # ------------------------------------------------------------------

    def _validate(self) -> None:
        for cls in self.classes.values():
            if cls.parent is not None and cls.parent not in self.classes:
                raise SchemaValidationError(
                    f"class {cls.name!r}: unknown parent {cls.parent!r}")
        self._check_acyclic()
        for cls in self.classes.values():
            self._check_slots(cls)
        for inst in self.instances.values():
            self._check_instance(inst)

    def _check_acyclic(self) -> None:
        for start in self.classes:
            seen = set()
            current: str | None = start
            while current is not None:
                if current in seen:
                    raise SchemaValidationError(
                        f"IS-A cycle through class {current!r}")
                seen.add(current)
                current = self.classes[current].parent

    def _check_slots(self, cls: ClassDef) -> None:
        names: set[str] = set()
        for name in reversed(self.ancestry(cls.name)):
            level = self.classes[name]
            for slot_name in [a.name for a in level.attributes] + [r.name for r in level.relations]:
                if slot_name in names:
                    raise SchemaValidationError(
                        f"class {cls.name!r}: effective slot name collision on {slot_name!r}")
                names.add(slot_name)
        for attr in cls.attributes:
            if attr.kind not in VALUE_KINDS:
                raise SchemaValidationError(
                    f"class {cls.name!r}, attribute {attr.name!r}: bad kind {attr.kind!r}")
            if attr.card not in CARDINALITIES:
                raise SchemaValidationError(
                    f"class {cls.name!r}, attribute {attr.name!r}: bad card {attr.card!r}")
        for rel in cls.relations:
            if rel.card not in CARDINALITIES:
                raise SchemaValidationError(
                    f"class {cls.name!r}, relation {rel.name!r}: bad card {rel.card!r}")
            if rel.target not in self.classes:
                raise SchemaValidationError(
                    f"class {cls.name!r}, relation {rel.name!r}: unknown target class {rel.target!r}")

    def _check_instance(self, inst: Instance) -> None:
        if inst.class_name not in self.classes:
            raise SchemaValidationError(
                f"instance {inst.id!r}: unknown class {inst.class_name!r}")
        attrs, rels = self.effective_slots(inst.class_name)
        for name, value in inst.attrs.items():
            decl = attrs.get(name)
            if decl is None:
                raise SchemaValidationError(
                    f"instance {inst.id!r}: undeclared attribute {name!r}")
            self._check_attr_value(inst.id, decl, value)
        for name, targets in inst.rels.items():
            decl = rels.get(name)
            if decl is None:
                raise SchemaValidationError(
                    f"instance {inst.id!r}: undeclared relation {name!r}")
            if decl.card == "one" and len(targets) > 1:
                raise SchemaValidationError(
                    f"instance {inst.id!r}, relation {name!r}: multiple targets on a card-one slot")
            if len(set(targets)) != len(targets):
                raise SchemaValidationError(
                    f"instance {inst.id!r}, relation {name!r}: duplicate target ids")
            for target in targets:
                other = self.instances.get(target)
                if other is None:
                    raise SchemaValidationError(
                        f"instance {inst.id!r}, relation {name!r}: dangling target {target!r}")
                if not self.is_subclass_of(other.class_name, decl.target):
                    raise SchemaValidationError(
                        f"instance {inst.id!r}, relation {name!r}: target {target!r} "
                        f"is a {other.class_name}, expected {decl.target} or a descendant")

    def _check_attr_value(self, owner: str, decl: AttributeDef, value: AttrSlot) -> None:
        where = f"instance {owner!r}, attribute {decl.name!r}"
        if decl.card == "one":
            if isinstance(value, tuple):
                raise SchemaValidationError(f"{where}: list value on a card-one slot")
            self._check_scalar(where, decl.kind, value)
        else:
            if not isinstance(value, tuple):
                raise SchemaValidationError(f"{where}: card-many slot requires a list value")
            if len(set(value)) != len(value):
                raise SchemaValidationError(f"{where}: duplicate values in a set slot")
            for item in value:
                self._check_scalar(where, decl.kind, item)

    @staticmethod
    def _check_scalar(where: str, kind: str, value: Any) -> None:
        if kind == "bool":
            ok = isinstance(value, bool)
        elif kind == "number":
            ok = isinstance(value, float) and not isinstance(value, bool)
        else:
            ok = isinstance(value, str)
        if not ok:
            raise SchemaValidationError(f"{where}: value {value!r} does not match kind {kind!r}")

    # ------------------------------------------------------------------
    # equality (structural)
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ontology):
            return NotImplemented
        return self.classes == other.classes and self.instances == other.instances

    def __repr__(self) -> str:
        return f"Ontology(classes={len(self.classes)}, instances={len(self.instances)})"


# ----------------------------------------------------------------------
# document parsing / serialization
# ----------------------------------------------------------------------

def parse_ontology(text: str, source: str = "<string>") -> Ontology:
    """Parse and validate an ontology document from YAML text."""
    doc = _load_yaml(text, source)
    if not isinstance(doc, dict):
        raise ParseError("ontology document must be a mapping", source)
    classes = [_parse_class(entry, source) for entry in _require_list(doc, "classes", source)]
    instances = [_parse_instance(entry, source) for entry in _require_list(doc, "instances", source)]
    return Ontology(classes, instances)


def load_ontology(path: str | Path) -> Ontology:
    """Parse and validate the ontology document at *path*."""
    path = Path(path)
    return parse_ontology(path.read_text(encoding="utf-8"), source=str(path))


def ontology_to_document(onto: Ontology) -> dict[str, Any]:
    """Plain-data form of an ontology, re-parseable by parse_ontology."""
    classes = []
    for cls in onto.classes.values():
        entry: dict[str, Any] = {"name": cls.name}
        if cls.parent is not None:
            entry["parent"] = cls.parent
        entry["attributes"] = [
            {"name": a.name, "kind": a.kind, "card": a.card} for a in cls.attributes]
        entry["relations"] = [
            {"name": r.name, "target": r.target, "card": r.card} for r in cls.relations]
        classes.append(entry)
    instances = []
    for inst in onto.instances.values():
        instances.append({
            "id": inst.id,
            "class": inst.class_name,
            "attrs": {k: list(v) if isinstance(v, tuple) else v for k, v in inst.attrs.items()},
            "rels": {k: list(v) for k, v in inst.rels.items()},
        })
    return {"classes": classes, "instances": instances}


def dump_ontology(onto: Ontology) -> str:
    """Serialize an ontology back to its YAML document form."""
    return yaml.safe_dump(ontology_to_document(onto), sort_keys=False, allow_unicode=True)


# ----------------------------------------------------------------------
# parsing helpers
# ----------------------------------------------------------------------

def _load_yaml(text: str, source: str) -> Any:
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        if mark is not None:
            raise ParseError(str(getattr(exc, "problem", exc)), source,
                             line=mark.line + 1, column=mark.column + 1) from exc
        raise ParseError(str(exc), source) from exc


def _require_list(doc: Mapping[str, Any], key: str, source: str) -> list:
    value = doc.get(key)
    if value is None:
        return []
    if not isinstance(value, list):
        raise ParseError(f"{key!r} must be a list", source)
    return value


def _ident(value: Any, what: str, source: str) -> str:
    if not isinstance(value, str) or not _IDENT_RE.match(value):
        raise ParseError(f"{what} must be an identifier, got {value!r}", source)
    return value


def _parse_class(entry: Any, source: str) -> ClassDef:
    if not isinstance(entry, dict):
        raise ParseError("class entry must be a mapping", source)
    name = _ident(entry.get("name"), "class name", source)
    parent = entry.get("parent")
    if parent is not None:
        parent = _ident(parent, f"parent of class {name!r}", source)
    attributes = []
    for raw in entry.get("attributes") or []:
        if not isinstance(raw, dict):
            raise ParseError(f"class {name!r}: attribute entry must be a mapping", source)
        attributes.append(AttributeDef(
            name=_ident(raw.get("name"), f"attribute name in class {name!r}", source),
            kind=str(raw.get("kind", "")),
            card=str(raw.get("card", "one")),
        ))
    relations = []
    for raw in entry.get("relations") or []:
        if not isinstance(raw, dict):
            raise ParseError(f"class {name!r}: relation entry must be a mapping", source)
        relations.append(RelationDef(
            name=_ident(raw.get("name"), f"relation name in class {name!r}", source),
            target=_ident(raw.get("target"), f"relation target in class {name!r}", source),
            card=str(raw.get("card", "many")),
        ))
    return ClassDef(name=name, parent=parent,
                    attributes=tuple(attributes), relations=tuple(relations))


def _parse_instance(entry: Any, source: str) -> Instance:
    if not isinstance(entry, dict):
        raise ParseError("instance entry must be a mapping", source)
    iid = _ident(entry.get("id"), "instance id", source)
    class_name = _ident(entry.get("class"), f"class of instance {iid!r}", source)
    attrs: dict[str, AttrSlot] = {}
    raw_attrs = entry.get("attrs") or {}
    if not isinstance(raw_attrs, dict):
        raise ParseError(f"instance {iid!r}: 'attrs' must be a mapping", source)
    for name, value in raw_attrs.items():
        name = _ident(name, f"attribute name on instance {iid!r}", source)
        if isinstance(value, list):
            attrs[name] = tuple(sorted((_coerce_scalar(v, source) for v in value), key=repr))
        else:
            attrs[name] = _coerce_scalar(value, source)
    rels: dict[str, tuple[str, ...]] = {}
    raw_rels = entry.get("rels") or {}
    if not isinstance(raw_rels, dict):
        raise ParseError(f"instance {iid!r}: 'rels' must be a mapping", source)
    for name, value in raw_rels.items():
        name = _ident(name, f"relation name on instance {iid!r}", source)
        if not isinstance(value, list):
            raise ParseError(
                f"instance {iid!r}, relation {name!r}: value must be a list of ids", source)
        rels[name] = tuple(sorted(_ident(v, f"target in {iid}.{name}", source) for v in value))
    return Instance(id=iid, class_name=class_name, attrs=attrs, rels=rels)


def _coerce_scalar(value: Any, source: str) -> AttrValue:
    # ints arriving from YAML are stored as floats so that 3 and 3.0 compare equal
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return float(value)
    if isinstance(value, (float, str)):
        return value
    raise ParseError(f"unsupported attribute value {value!r}", source)
