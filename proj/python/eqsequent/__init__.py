"""Proof kernel for first-order sequent calculi with equality.

Derivations are passed around as document text (the ``.drv`` format);
reports come back as dictionaries with the same field names as the
command-line tool's ``--format json`` output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from . import _core
from ._core import (
    BudgetInvalid,
    ParseError,
    PipelineInvalid,
    ProofError,
    SearchUnsupported,
    UnknownSystem,
)

__all__ = [
    "BudgetInvalid",
    "ParseError",
    "PipelineInvalid",
    "ProofError",
    "SearchResult",
    "SearchUnsupported",
    "UnknownSystem",
    "check",
    "normalize",
    "pipeline_steps",
    "search",
    "stats",
    "transform",
]


@dataclass
class SearchResult:
    found: bool
    certificate: dict
    document: Optional[str]  # the derivation when found


def check(text: str, system: Optional[str] = None) -> dict:
    """Check a document in its declared system, or in ``system``."""
    return json.loads(_core.check_document(text, system))


def transform(text: str, pipeline: Sequence[str] | str, order: Optional[str] = None) -> tuple[str, dict]:
    """Run a pipeline; returns the output document and the step report."""
    steps = pipeline.split(",") if isinstance(pipeline, str) else list(pipeline)
    out, report = _core.transform_document(text, [s.strip() for s in steps], order)
    return out, json.loads(report)


def search(goal: str, system: str, depth: int = 8, cap: int = 3,
           universe: Optional[Sequence[str]] = None) -> SearchResult:
    cert, doc = _core.search(goal, system, depth, cap, list(universe) if universe is not None else None)
    data = json.loads(cert)
    return SearchResult(found=data["result"] == "found", certificate=data, document=doc)


def stats(text: str, order: Optional[str] = None) -> dict:
    return json.loads(_core.stats_document(text, order))


def normalize(text: str) -> str:
    """Parse and print a document."""
    return _core.normalize_document(text)


def pipeline_steps() -> list[str]:
    return list(_core.pipeline_steps())
