"""Author a new application context and watch the ranking change.

Contexts are plain declarative documents, so a user can reformulate the
similarity criteria without touching any code.  Here we build a
"pourability" perspective: only the task overlap and the part structure
matter, capacity and solid contents are ignored.

Also shows what validation catches: simil on a relation demands an entry
for the extended recursion path, otherwise the recursion would hit an
undefined path at evaluation time.
"""

from ctxsim import SimilarityEngine, load_case_study, parse_context
from ctxsim.errors import SchemaValidationError
from ctxsim.render import ranking_table

case = load_case_study()
engine = SimilarityEngine(case.ontology)

POURABILITY = """
name: pourability
entries:
  - path: {start: Object, relations: []}
    rels:
      - {name: hasCharacterizingTask, op: inter}
      - {name: hasPart, op: simil}
  - path: {start: Object, relations: [hasPart]}
    rels:
      - {name: hasFunctionality, op: inter}
"""

context = parse_context(POURABILITY, case.ontology)
print(ranking_table(engine.rank(context, "WateringCan_1")))
print(ranking_table(engine.rank(case.contexts["usage"], "WateringCan_1")))

BROKEN = """
name: broken
entries:
  - path: {start: Object, relations: []}
    rels: [{name: hasPart, op: simil}]
"""

try:
    parse_context(BROKEN, case.ontology)
except SchemaValidationError as err:
    print(f"rejected as expected: {err}")
