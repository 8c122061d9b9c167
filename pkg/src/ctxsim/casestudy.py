"""Bundled kitchen-container case study and its golden expected results.

Ships the Alessi container dataset (nine described objects with their
functional parts, tasks, and functionalities), the two application
contexts ``part`` and ``usage``, and the published ranking tables those
contexts must reproduce.  The goldens are the frozen reference: a
mismatch is an engine bug, never a fixture to adjust.

Files live in ``ctxsim/data/`` and are integrity-checked on load.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .context import ApplicationContext, parse_context
from .errors import CtxsimError
from .ontology import Ontology, parse_ontology

_CHECKSUMS = {
    "alessi.onto": "453e720951806f3182470ea888a5f93d40f4c877c81ba33b47cbc58fd3fe3331",
    "part.ctx": "56624e289cfd1de9ecc49bacddf3725a00d48b298bc30ea074ea9a2639638da8",
    "usage.ctx": "407deea2788f7cad647f9c5c577b2250efea006b4bb5cecbe444b79a21b76028",
    "golden_part.tsv": "f79902aff444b259cf70727e7f926b92ca9d05a079b72c1223db221b398f9966",
    "golden_usage.tsv": "61be050f09fe7598414503333aec012fa4044bc4b260f4168522d10e01af8c17",
}

OBJECT_IDS = (
    "FruitBowl_30", "IceBucket_28", "Jug_24", "Jug_26", "Kettles_19",
    "Kettles_20", "MilkPot_22", "OilCruet_36", "WateringCan_1",
)


class ResourceCorruptionError(CtxsimError):
    """A bundled data file does not match its recorded checksum."""


@dataclass(frozen=True)
class GoldenRanking:
    """Expected ranking row: ordered tie groups with printed scores."""

    context: str
    query: str
    groups: tuple[tuple[tuple[str, ...], float], ...]  # ((ids...), score), best first

    def all_ids(self) -> set[str]:
        return {i for ids, _ in self.groups for i in ids}


@dataclass(frozen=True)
class CaseStudy:
    """Everything the acceptance suite needs, loaded and validated."""

    ontology: Ontology
    contexts: dict[str, ApplicationContext]
    goldens: dict[str, list[GoldenRanking]]  # context name -> 9 ranking rows


def data_path(name: str) -> Path:
    """Filesystem path of a bundled data file (for the CLI defaults)."""
    return Path(str(resources.files("ctxsim").joinpath("data", name)))


def _read(name: str) -> str:
    text = resources.files("ctxsim").joinpath("data", name).read_text(encoding="utf-8")
    digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
    if digest != _CHECKSUMS[name]:
        raise ResourceCorruptionError(
            f"bundled file {name!r} is corrupted (sha256 {digest} != {_CHECKSUMS[name]})")
    return text


def _parse_golden(context_name: str, text: str) -> list[GoldenRanking]:
    rows: dict[str, list[tuple[tuple[str, ...], float]]] = {}
    order: list[str] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            query, ids, score = line.split("\t")
        except ValueError:
            raise CtxsimError(
                f"golden_{context_name}.tsv:{lineno}: expected 3 tab-separated fields") from None
        if query not in rows:
            rows[query] = []
            order.append(query)
        rows[query].append((tuple(ids.split(",")), float(score)))
    return [GoldenRanking(context=context_name, query=q, groups=tuple(rows[q])) for q in order]


def load_case_study() -> CaseStudy:
    """Load the bundled ontology, both contexts, and the golden rankings."""
    onto = parse_ontology(_read("alessi.onto"), source="alessi.onto")
    contexts = {}
    for name in ("part", "usage"):
        ctx = parse_context(_read(f"{name}.ctx"), onto, source=f"{name}.ctx")
        contexts[ctx.name] = ctx
    goldens = {name: _parse_golden(name, _read(f"golden_{name}.tsv"))
               for name in ("part", "usage")}
    return CaseStudy(ontology=onto, contexts=contexts, goldens=goldens)
