"""Rank the repository under two application contexts.

The same nine containers, two different questions:

* "part"  — which objects are built from the parts I already have?
* "usage" — which objects could serve the same purpose?

The measure is directed.  sim(x, y) = 1 means everything x offers is
also present in y, while sim(y, x) says how much of y's richer
description x covers — that gap is the price of replacing y with x.
"""

from ctxsim import SimilarityEngine, load_case_study
from ctxsim.render import format_score, ranking_table

case = load_case_study()
engine = SimilarityEngine(case.ontology)

for name in ("part", "usage"):
    context = case.contexts[name]
    print("=" * 62)
    print(f"context {name!r}")
    print("=" * 62)
    for query in ("IceBucket_28", "WateringCan_1", "Kettles_19"):
        print(ranking_table(engine.rank(context, query)))

usage = case.contexts["usage"]
forward = engine.sim(usage, "WateringCan_1", "Kettles_19")
backward = engine.sim(usage, "Kettles_19", "WateringCan_1")
print("asymmetry, spelled out:")
print(f"  sim(WateringCan_1, Kettles_19) = {format_score(forward.value)}"
      "   (everything the can does, a kettle does)")
print(f"  sim(Kettles_19, WateringCan_1) = {format_score(backward.value)}"
      "   (a kettle also boils, which the can cannot)")
print("\nwhy, term by term (query = Kettles_19):")
for term in backward.terms:
    print(f"  {term.entity:<24} {term.operation.value:<6} -> {format_score(term.score)}")
