"""Output formatting shared by the CLI and the HTTP service.

All numeric output is rounded half-away-from-zero to 4 decimal places,
matching the published tables.  Both frontends build their payloads here,
so a score can never differ between them.
"""

from __future__ import annotations

import math
from decimal import ROUND_HALF_UP, Decimal
from typing import Any

from .context import ApplicationContext, context_to_document
from .engine import Ranking, SimilarityMatrix, SimilarityScore
from .ontology import Instance, Ontology


def format_score(value: float) -> str:
    """4-decimal string, halves rounded away from zero (0.5 -> '0.5000')."""
    return str(Decimal(repr(value)).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP))


def round_score(value: float) -> float:
    """The float carried by JSON payloads: same 4-decimal rounding."""
    return float(format_score(value))


def gray_pixel(value: float) -> int:
    """Grayscale byte for a similarity: round(255 * (1 - sim)), darker = closer."""
    return int(math.floor(255.0 * (1.0 - value) + 0.5))


# ----------------------------------------------------------------------
# matrix renderings
# ----------------------------------------------------------------------

def matrix_to_csv(matrix: SimilarityMatrix) -> str:
    """Header row/column of ids plus 4-decimal scores."""
    lines = ["," + ",".join(matrix.ids)]
    for i, query_id in enumerate(matrix.ids):
        cells = [format_score(float(v)) for v in matrix.values[i]]
        lines.append(",".join([query_id] + cells))
    return "\n".join(lines) + "\n"


def matrix_to_pgm(matrix: SimilarityMatrix) -> bytes:
    """Binary P5 image, one pixel per cell, sim = 1 rendered black."""
    n = len(matrix.ids)
    header = f"P5\n{n} {n}\n255\n".encode("ascii")
    pixels = bytes(gray_pixel(float(v)) for row in matrix.values for v in row)
    return header + pixels


def matrix_payload(matrix: SimilarityMatrix) -> dict[str, Any]:
    return {
        "ids": list(matrix.ids),
        "values": [[round_score(float(v)) for v in row] for row in matrix.values],
    }


# ----------------------------------------------------------------------
# ranking renderings
# ----------------------------------------------------------------------

def ranking_payload(ranking: Ranking) -> dict[str, Any]:
    return {
        "query": ranking.query,
        "context": ranking.context,
        "groups": [{"ids": list(g.ids), "score": round_score(g.score)}
                   for g in ranking.groups],
    }


def ranking_table(ranking: Ranking) -> str:
    """Tie-grouped text table; a group covering every result prints ALL."""
    total = sum(len(g.ids) for g in ranking.groups)
    lines = [f"ranking for {ranking.query} (context: {ranking.context})"]
    for position, group in enumerate(ranking.groups, start=1):
        members = "ALL" if len(group.ids) == total > 1 else " ".join(group.ids)
        lines.append(f"{position:>3}.  {format_score(group.score)}  {members}")
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# similarity / instance / context payloads
# ----------------------------------------------------------------------

def similarity_payload(score: SimilarityScore) -> dict[str, Any]:
    terms = []
    for term in score.terms:
        entry: dict[str, Any] = {
            "path": term.path,
            "entity": term.entity,
            "op": term.operation.value,
            "score": round_score(term.score),
        }
        if term.elements:
            entry["elements"] = [
                {"element": m.element, "best_match": m.best_match, "score": round_score(m.score)}
                for m in term.elements]
        terms.append(entry)
    return {
        "value": round_score(score.value),
        "external": round_score(score.external),
        "extensional": round_score(score.extensional),
        "terms": terms,
    }


def instance_payload(inst: Instance) -> dict[str, Any]:
    return {
        "id": inst.id,
        "class": inst.class_name,
        "attrs": {k: list(v) if isinstance(v, tuple) else v for k, v in inst.attrs.items()},
        "rels": {k: list(v) for k, v in inst.rels.items()},
    }


def instances_payload(onto: Ontology) -> list[dict[str, Any]]:
    return [instance_payload(onto.instances[iid]) for iid in sorted(onto.instances)]


def context_payload(context: ApplicationContext) -> dict[str, Any]:
    return context_to_document(context)
