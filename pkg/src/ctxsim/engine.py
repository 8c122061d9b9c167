"""Directed, context-parameterized instance similarity.

sim(x, y) multiplies two layers:

* external similarity — a structural comparison of the instances' classes:
  the mean of class matching (IS-A distance and depth) and slot matching
  (shared effective slot names over the query class's slot count);
* extensional similarity — the mean over the context entry's (slot,
  operation) terms at the query's start path, where ``simil`` on a
  relation recurses into the related instances at the extended path.

Both layers are directed.  Term scores normalize by the query side, so a
query whose characteristics are contained in the target scores exactly 1
while the reverse direction generally does not.

Missing values follow the containment direction: a slot absent on the
query imposes nothing (the term is skipped); a slot present on the query
but absent on the target scores 0.  An entry whose terms are all skipped
scores 1.

All entry points are pure functions of (ontology, context, arguments) and
safe to call concurrently; the engine holds only immutable references.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import datalayer
from .context import ApplicationContext, Operation, RecursionPath, terminal_class
from .errors import ContextMismatchError
from .ontology import Instance, Ontology


@dataclass(frozen=True)
class EngineConfig:
    """Tunable constants of class matching.

    The two weights scale the IS-A distances from the compared classes to
    their lowest common ancestor.  Keeping the query-side weight below
    the target-side weight makes a subclass more similar to its
    superclass than vice versa.
    """

    query_distance_weight: float = 0.3
    target_distance_weight: float = 0.7


@dataclass(frozen=True)
class ElementMatch:
    """Best counterpart found for one element of a recursed relation."""

    element: str
    best_match: str | None
    score: float


@dataclass(frozen=True)
class TermScore:
    """Score of a single (slot, operation) term, for explanation."""

    path: str
    entity: str
    operation: Operation
    score: float
    elements: tuple[ElementMatch, ...] = ()


@dataclass(frozen=True)
class SimilarityScore:
    """Directed similarity with its component breakdown."""

    value: float
    external: float
    extensional: float
    terms: tuple[TermScore, ...] = ()


@dataclass(frozen=True)
class TieGroup:
    """Instances sharing one score, occupying a single rank position."""

    ids: tuple[str, ...]
    score: float


@dataclass(frozen=True)
class Ranking:
    """Tie-grouped retrieval list for one query under one context."""

    query: str
    context: str
    groups: tuple[TieGroup, ...]


@dataclass
class SimilarityMatrix:
    """Full directed score grid; rows are queries, columns are targets."""

    ids: tuple[str, ...]
    values: np.ndarray = field(repr=False)


class SimilarityEngine:
    """Evaluates sim/rank/matrix against one immutable ontology."""

    def __init__(self, onto: Ontology, config: EngineConfig = EngineConfig()):
        self.onto = onto
        self.config = config

    # ------------------------------------------------------------------
    # external similarity (class level)
    # ------------------------------------------------------------------

    def class_matching(self, c1: str, c2: str) -> float:
        """Directed IS-A closeness of two classes.

        1 for identical classes, 0 across disjoint trees; otherwise
        (1 + depth(lca)) / (1 + depth(lca) + wq*d1 + wt*d2) with d1, d2
        the distances of c1, c2 from their lowest common ancestor.
        """
        self.onto.class_def(c1)
        self.onto.class_def(c2)
        if c1 == c2:
            return 1.0
        lca = self.onto.lowest_common_ancestor(c1, c2)
        if lca is None:
            return 0.0
        depth = self.onto.class_depth(lca)
        d1 = self.onto.class_depth(c1) - depth
        d2 = self.onto.class_depth(c2) - depth
        base = 1.0 + depth
        return base / (base
                       + self.config.query_distance_weight * d1
                       + self.config.target_distance_weight * d2)

    def slot_matching(self, c1: str, c2: str) -> float:
        """Shared effective slot names over c1's slot count; 1 if c1 has none."""
        a1, r1 = self.onto.effective_slots(c1)
        a2, r2 = self.onto.effective_slots(c2)
        names1 = set(a1) | set(r1)
        if not names1:
            return 1.0
        names2 = set(a2) | set(r2)
        return len(names1 & names2) / len(names1)

    def external_similarity(self, i1: Instance, i2: Instance) -> float:
        """Mean of class matching and slot matching on the instances' classes."""
        return (self.class_matching(i1.class_name, i2.class_name)
                + self.slot_matching(i1.class_name, i2.class_name)) / 2.0

    # ------------------------------------------------------------------
    # extensional similarity (value level)
    # ------------------------------------------------------------------

    def extensional_similarity(self, context: ApplicationContext, path: RecursionPath,
                               i1: Instance, i2: Instance) -> float:
        """Mean of the entry's term scores at *path* for the directed pair."""
        if context.lookup(path) is None:
            raise ContextMismatchError(
                f"context {context.name!r} has no entry at {path}")
        if not self.onto.is_subclass_of(i1.class_name, terminal_class(self.onto, path)):
            raise ContextMismatchError(
                f"instance {i1.id!r} ({i1.class_name}) does not conform to {path}")
        return self._entry_mean(context, path, i1, i2, collect=None)

    def sim(self, context: ApplicationContext, query_id: str, target_id: str) -> SimilarityScore:
        """Directed similarity of query to target with term breakdown."""
        query = self.onto.instance(query_id)
        target = self.onto.instance(target_id)
        path = self._start_path_for(context, query.class_name)
        terms: list[TermScore] = []
        extensional = self._entry_mean(context, path, query, target, collect=terms)
        external = self.external_similarity(query, target)
        return SimilarityScore(value=external * extensional, external=external,
                               extensional=extensional, terms=tuple(terms))

    def rank(self, context: ApplicationContext, query_id: str) -> Ranking:
        """All other instances of the query's class, best first.

        Equal scores form one tie group; ids inside a group are sorted so
        the output does not depend on instance-store order.
        """
        query = self.onto.instance(query_id)
        self._start_path_for(context, query.class_name)
        by_score: dict[float, list[str]] = {}
        for candidate in self.onto.instances_of(query.class_name):
            if candidate.id == query_id:
                continue
            score = self.sim(context, query_id, candidate.id).value
            by_score.setdefault(score, []).append(candidate.id)
        groups = tuple(TieGroup(ids=tuple(sorted(ids)), score=score)
                       for score, ids in sorted(by_score.items(), key=lambda kv: -kv[0]))
        return Ranking(query=query_id, context=context.name, groups=groups)

    def matrix(self, context: ApplicationContext, ids: list[str] | None = None) -> SimilarityMatrix:
        """Directed score grid over *ids* (default: all applicable instances)."""
        if ids is None:
            ids = self.applicable_ids(context)
        values = np.empty((len(ids), len(ids)), dtype=np.float64)
        for i, query_id in enumerate(ids):
            for j, target_id in enumerate(ids):
                values[i, j] = self.sim(context, query_id, target_id).value
        return SimilarityMatrix(ids=tuple(ids), values=values)

    def applicable_ids(self, context: ApplicationContext) -> list[str]:
        """Ids of instances whose class matches a context start path, sorted."""
        starts = context.start_paths()
        out = []
        for iid in sorted(self.onto.instances):
            cls = self.onto.instances[iid].class_name
            if any(self.onto.is_subclass_of(cls, p.start) for p in starts):
                out.append(iid)
        return out

    # ------------------------------------------------------------------
    # internals
    # ------------------------------------------------------------------

    def _start_path_for(self, context: ApplicationContext, class_name: str) -> RecursionPath:
        # most specific start class wins; candidates all sit on one ancestor
        # chain, so the deepest is unique
        matches = [p for p in context.start_paths()
                   if self.onto.is_subclass_of(class_name, p.start)]
        if not matches:
            raise ContextMismatchError(
                f"no start path in context {context.name!r} applies to class {class_name!r}")
        return max(matches, key=lambda p: self.onto.class_depth(p.start))

    def _entry_mean(self, context: ApplicationContext, path: RecursionPath,
                    i1: Instance, i2: Instance, collect: list[TermScore] | None) -> float:
        entry = context.entries[path]
        attr_decls = self.onto.effective_slots(terminal_class(self.onto, path))[0]
        scores: list[float] = []

        for name, op in entry.attribute_ops:
            a = i1.attr_value_set(name)
            if a is None:
                continue
            b = i2.attr_value_set(name)
            if b is None:
                score = 0.0
            elif op is Operation.COUNT:
                score = datalayer.op_count(a, b)
            elif op is Operation.INTER:
                score = datalayer.op_inter(a, b)
            else:
                comparator = _SCALAR_COMPARATORS[attr_decls[name].kind]
                score = datalayer.op_simil(a, b, comparator)
            scores.append(score)
            if collect is not None:
                collect.append(TermScore(path.label, name, op, score))

        for name, op in entry.relation_ops:
            a = i1.rel_targets(name)
            if a is None:
                continue
            b = i2.rel_targets(name)
            matches: tuple[ElementMatch, ...] = ()
            if b is None:
                score = 0.0
            elif op is Operation.COUNT:
                score = datalayer.op_count(a, b)
            elif op is Operation.INTER:
                score = datalayer.op_inter(a, b)
            else:
                sub_path = path.extend(name)
                cache: dict[tuple[str, str], float] = {}

                def element_sim(x: str, y: str) -> float:
                    key = (x, y)
                    if key not in cache:
                        xi = self.onto.instances[x]
                        yi = self.onto.instances[y]
                        cache[key] = (self._entry_mean(context, sub_path, xi, yi, None)
                                      * self.external_similarity(xi, yi))
                    return cache[key]

                score = datalayer.op_simil(a, b, element_sim)
                if collect is not None:
                    matches = self._best_matches(a, b, element_sim)
            scores.append(score)
            if collect is not None:
                collect.append(TermScore(path.label, name, op, score, elements=matches))

        if not scores:
            return 1.0
        return sum(scores) / len(scores)

    @staticmethod
    def _best_matches(a_set, b_set, element_sim) -> tuple[ElementMatch, ...]:
        ordered_b = sorted(b_set, key=repr)
        matches = []
        for a in sorted(a_set, key=repr):
            best_id, best = None, -1.0
            for b in ordered_b:
                s = element_sim(a, b)
                if s > best:
                    best_id, best = b, s
            matches.append(ElementMatch(element=a, best_match=best_id,
                                        score=best if best >= 0.0 else 0.0))
        return tuple(matches)


_SCALAR_COMPARATORS = {
    "bool": datalayer.compare_boolean,
    "number": datalayer.compare_number,
    "text": datalayer.compare_text,
}
