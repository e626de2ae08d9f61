"""Layer 2: plan execution against a data source.

This module deliberately has no provider dependency: nothing here can spend
an LLM token. It issues count and facet queries, assembles a statistical
summary, and enforces the fixed-size output contract, so the bytes that
reach the synthesizer are bounded regardless of how many records the
source holds.

Per-intent strategy:
  * trend: a yearly series per subject over the plan's window (clamped to
    the most recent 50 years); totals are the window sums
  * comparison: totals per subject over the plan's range; yearly series
    too when a range was given
  * ranking: totals per subject, plus one facet series (rank dimension,
    top_n buckets) for the first subject
  * statistics: totals per subject, plus a work-type facet series for the
    first subject

Facet queries carry no year filter: the source contract aggregates facets
over the subject's full history. Zero-count subjects stay in totals so the
synthesizer can state that nothing matched; series with no points are
dropped.
"""

from __future__ import annotations

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
from scholarlens.datasources.base import DataSource

STATISTICS_FACET_LIMIT = 10
TREND_WINDOW_YEARS = 50


def _clamp_window(from_year: int, until_year: int) -> tuple[int, int]:
    return max(from_year, until_year - (TREND_WINDOW_YEARS - 1)), until_year


def _yearly_series(source: DataSource, subject: str, fy: int, uy: int) -> Series:
    points = tuple(
        DataPoint(label=str(year), value=count)
        for year, count in source.yearly_counts(subject, fy, uy)
    )
    return Series(subject=subject, points=points)


def _facet_series(source: DataSource, subject: str, dimension: str, limit: int) -> Series:
    points = tuple(
        DataPoint(label=bucket.label, value=bucket.count)
        for bucket in source.facet_counts(subject, dimension, limit)
    )
    return Series(subject=subject, points=points)


def execute(plan: QueryPlan, source: DataSource) -> StatisticalSummary:
    """Run the plan's aggregation queries and return a size-capped summary."""
    rng = plan.time_range
    totals: dict[str, int] = {}
    series: list[Series] = []

    if plan.intent is Intent.TREND:
        fy, uy = _clamp_window(rng.from_year, rng.until_year)
        for subject in plan.subjects:
            s = _yearly_series(source, subject, fy, uy)
            series.append(s)
            totals[subject] = sum(p.value for p in s.points)
    elif plan.intent is Intent.COMPARISON:
        for subject in plan.subjects:
            totals[subject] = source.count_total(subject, rng)
        if rng is not None:
            fy, uy = _clamp_window(rng.from_year, rng.until_year)
            for subject in plan.subjects:
                series.append(_yearly_series(source, subject, fy, uy))
    else:  # ranking or statistics
        for subject in plan.subjects:
            totals[subject] = source.count_total(subject, rng)
        if plan.intent is Intent.RANKING:
            series.append(
                _facet_series(source, plan.subjects[0], plan.rank_dimension, plan.top_n)
            )
        else:
            series.append(
                _facet_series(source, plan.subjects[0], "work_type", STATISTICS_FACET_LIMIT)
            )

    summary = StatisticalSummary(
        series=tuple(s for s in series if s.points),
        totals=totals,
        metadata=SummaryMetadata(
            source_name=source.source_name,
            dataset_size_estimate=source.dataset_size_estimate(),
            retrieved_at=source.retrieved_at(),
            plan_echo=plan,
        ),
    )
    return enforce_size_contract(summary)


def enforce_size_contract(summary: StatisticalSummary) -> StatisticalSummary:
    """Shrink a summary until its canonical serialization fits the budget.

    Labels are cut to MAX_LABEL_CHARS and at most MAX_SERIES series survive;
    then the largest per-series point cap in MAX_POINTS..0 whose canonical
    form fits K_MAX estimated tokens wins. Trend and comparison series keep
    their latest points (most recent years); ranking and statistics series
    keep their first points (highest counts). Already-fitting summaries come
    back unchanged, so the operation is idempotent.
    """
    keep_latest = summary.metadata.plan_echo.intent in (Intent.TREND, Intent.COMPARISON)
    base = [
        Series(
            subject=s.subject,
            points=tuple(
                DataPoint(label=p.label[:MAX_LABEL_CHARS], value=p.value)
                for p in s.points
            ),
        )
        for s in summary.series[:MAX_SERIES]
        if s.points
    ]
    candidate = None
    for cap in range(MAX_POINTS, -1, -1):
        if cap > 0:
            cut = [
                Series(
                    subject=s.subject,
                    points=s.points[-cap:] if keep_latest else s.points[:cap],
                )
                for s in base
            ]
        else:
            cut = []
        candidate = StatisticalSummary(
            series=tuple(s for s in cut if s.points),
            totals=summary.totals,
            metadata=summary.metadata,
        )
        if estimate_tokens(serialize_canonical(candidate)) <= K_MAX:
            return candidate
    return candidate  # cap 0: metadata and totals only; practically always fits
