"""Brute-force aggregation oracle.

Computes the statistical summary for a plan by direct pure-Python scans over
materialized records. It shares only the domain types, the canonical
serializer, and the token estimator with the executor; the aggregation and
truncation logic here is written independently so the equivalence suite
(byte-identical canonical output) is a real cross-check, not a tautology.

Shared semantics both sides implement:
  * subject matching: lowercased whitespace tokens of the subject
    intersected with the record's keyword set
  * trend/comparison year windows clamped to the most recent 50 years
    of the requested range
  * facet group-bys ignore the plan's time range (the source contract
    has no range parameter on facet queries)
  * ordering by (count desc, label asc); zero-count buckets omitted
  * size contract: labels cut to 80 chars, at most 5 series, then the
    largest per-series point cap in 50..0 whose canonical serialization
    fits the 800-token budget (trend/comparison keep the latest points,
    ranking/statistics keep the first); empty series dropped
"""

from __future__ import annotations

from collections import Counter

from scholarlens.core.serialize import serialize_canonical
from scholarlens.core.tokens import estimate_tokens
from scholarlens.core.types import (
    K_MAX,
    MAX_LABEL_CHARS,
    MAX_POINTS,
    MAX_SERIES,
    DataPoint,
    Intent,
    QueryPlan,
    Series,
    StatisticalSummary,
    SummaryMetadata,
)
from scholarlens.datasources.synthetic import (
    SYNTHETIC_RETRIEVED_AT,
    SYNTHETIC_SOURCE_NAME,
    SyntheticRecord,
)

STATISTICS_FACET_LIMIT = 10
TREND_WINDOW_YEARS = 50


def _matches(record: SyntheticRecord, subject: str) -> bool:
    return any(token in record.keywords for token in subject.lower().split())


def _count(records: list[SyntheticRecord], subject: str, fy=None, uy=None) -> int:
    n = 0
    for r in records:
        if fy is not None and not (fy <= r.year <= uy):
            continue
        if _matches(r, subject):
            n += 1
    return n


def _year_points(
    records: list[SyntheticRecord], subject: str, fy: int, uy: int
) -> list[DataPoint]:
    by_year: Counter[int] = Counter()
    for r in records:
        if fy <= r.year <= uy and _matches(r, subject):
            by_year[r.year] += 1
    return [DataPoint(label=str(y), value=by_year.get(y, 0)) for y in range(fy, uy + 1)]


def _facet_points(
    records: list[SyntheticRecord], subject: str, dimension: str, limit: int
) -> list[DataPoint]:
    groups: Counter[str] = Counter()
    for r in records:
        if _matches(r, subject):
            groups[getattr(r, dimension)] += 1
    ordered = sorted(groups.items(), key=lambda kv: (-kv[1], kv[0]))
    return [DataPoint(label=label, value=count) for label, count in ordered[:limit]]


def _clamp_window(fy: int, uy: int) -> tuple[int, int]:
    return max(fy, uy - (TREND_WINDOW_YEARS - 1)), uy


def _shrink(summary: StatisticalSummary) -> StatisticalSummary:
    """Independent copy of the size-contract pass (see module docstring)."""
    keep_latest = summary.metadata.plan_echo.intent in (Intent.TREND, Intent.COMPARISON)
    base = [
        Series(
            subject=s.subject,
            points=tuple(
                DataPoint(label=p.label[:MAX_LABEL_CHARS], value=p.value) for p in s.points
            ),
        )
        for s in summary.series[:MAX_SERIES]
        if s.points
    ]
    for cap in range(MAX_POINTS, -1, -1):
        cut = [
            Series(subject=s.subject, points=s.points[-cap:] if keep_latest else s.points[:cap])
            for s in base
            if cap > 0
        ]
        candidate = StatisticalSummary(
            series=tuple(s for s in cut if s.points),
            totals=summary.totals,
            metadata=summary.metadata,
        )
        if estimate_tokens(serialize_canonical(candidate)) <= K_MAX:
            return candidate
    return candidate  # cap 0: metadata and totals alone, never reached in practice


def brute_force_aggregate(
    records: list[SyntheticRecord], plan: QueryPlan
) -> StatisticalSummary:
    """Reference summary for a plan, by full scans over the records."""
    rng = plan.time_range
    totals: dict[str, int] = {}
    series: list[Series] = []

    if plan.intent is Intent.TREND:
        fy, uy = _clamp_window(rng.from_year, rng.until_year)
        for subject in plan.subjects:
            points = _year_points(records, subject, fy, uy)
            series.append(Series(subject=subject, points=tuple(points)))
            totals[subject] = sum(p.value for p in points)
    elif plan.intent is Intent.COMPARISON:
        for subject in plan.subjects:
            if rng is None:
                totals[subject] = _count(records, subject)
            else:
                totals[subject] = _count(records, subject, rng.from_year, rng.until_year)
        if rng is not None:
            fy, uy = _clamp_window(rng.from_year, rng.until_year)
            for subject in plan.subjects:
                points = _year_points(records, subject, fy, uy)
                series.append(Series(subject=subject, points=tuple(points)))
    else:  # ranking or statistics
        fy, uy = (rng.from_year, rng.until_year) if rng else (None, None)
        for subject in plan.subjects:
            totals[subject] = _count(records, subject, fy, uy)
        if plan.intent is Intent.RANKING:
            points = _facet_points(
                records, plan.subjects[0], plan.rank_dimension, plan.top_n
            )
        else:
            points = _facet_points(
                records, plan.subjects[0], "work_type", STATISTICS_FACET_LIMIT
            )
        series.append(Series(subject=plan.subjects[0], points=tuple(points)))

    summary = StatisticalSummary(
        series=tuple(s for s in series if s.points),
        totals=totals,
        metadata=SummaryMetadata(
            source_name=SYNTHETIC_SOURCE_NAME,
            dataset_size_estimate=len(records),
            retrieved_at=SYNTHETIC_RETRIEVED_AT,
            plan_echo=plan,
        ),
    )
    return _shrink(summary)
