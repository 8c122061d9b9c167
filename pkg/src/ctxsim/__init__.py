"""Context-dependent, asymmetric semantic similarity over ontology instances.

Public surface:

* :mod:`ctxsim.ontology` — schema + instance store, loading, validation
* :mod:`ctxsim.context` — application contexts (what to compare, and how)
* :mod:`ctxsim.datalayer` — value comparators and set operations
* :mod:`ctxsim.engine` — sim / rank / matrix evaluation
* :mod:`ctxsim.casestudy` — bundled container dataset and golden tables
* :mod:`ctxsim.service` / :mod:`ctxsim.cli` — HTTP and command-line faces
"""

from .casestudy import CaseStudy, GoldenRanking, load_case_study
from .context import (
    ApplicationContext,
    ContextEntry,
    Operation,
    RecursionPath,
    load_context,
    parse_context,
)
from .engine import (
    EngineConfig,
    Ranking,
    SimilarityEngine,
    SimilarityMatrix,
    SimilarityScore,
    TieGroup,
)
from .errors import (
    ContextMismatchError,
    CtxsimError,
    ParseError,
    SchemaValidationError,
    UnknownIdError,
)
from .ontology import (
    AttributeDef,
    ClassDef,
    Instance,
    Ontology,
    RelationDef,
    load_ontology,
    parse_ontology,
)

__version__ = "0.1.0"

__all__ = [
    "ApplicationContext",
    "AttributeDef",
    "CaseStudy",
    "ClassDef",
    "ContextEntry",
    "ContextMismatchError",
    "CtxsimError",
    "EngineConfig",
    "GoldenRanking",
    "Instance",
    "Ontology",
    "Operation",
    "ParseError",
    "Ranking",
    "RecursionPath",
    "RelationDef",
    "SchemaValidationError",
    "SimilarityEngine",
    "SimilarityMatrix",
    "SimilarityScore",
    "TieGroup",
    "UnknownIdError",
    "load_case_study",
    "load_context",
    "load_ontology",
    "parse_context",
    "parse_ontology",
    "__version__",
]
