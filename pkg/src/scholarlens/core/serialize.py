"""Canonical JSON serialization for summaries and plans.

The canonical form is what the size contract measures and what the
synthesizer receives, so it must be byte-stable: lexicographic key order,
no insignificant whitespace, UTF-8 text.
"""

from __future__ import annotations

import json
from typing import Any

from scholarlens.core.types import QueryPlan, StatisticalSummary


def canonical_json(payload: Any) -> str:
    """Serialize any JSON-able payload deterministically."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def serialize_canonical(summary: StatisticalSummary) -> str:
    """Byte-stable serialization of a summary.

    Structurally equal summaries always yield identical strings; list
    order (series, points) is preserved as stored.
    """
    return canonical_json(summary.to_dict())


def serialize_plan(plan: QueryPlan) -> str:
    """Byte-stable serialization of a query plan (the wire schema)."""
    return canonical_json(plan.to_dict())
