"""Chart configuration derived deterministically from a summary.

The chart is always computed here, never by a language model, so what gets
plotted is exactly what the executor counted.
"""

from __future__ import annotations

from typing import Optional

from scholarlens.core.types import ChartConfig, Intent, StatisticalSummary


def build_chart_config(summary: StatisticalSummary) -> Optional[ChartConfig]:
    plan = summary.metadata.plan_echo
    if not summary.series and all(v == 0 for v in summary.totals.values()):
        return None

    if plan.intent is Intent.TREND:
        return ChartConfig(
            chart_type="line",
            x_label="year",
            y_label="publications",
            series_refs=tuple(s.subject for s in summary.series),
        )
    if plan.intent is Intent.COMPARISON:
        if summary.series:
            return ChartConfig(
                chart_type="grouped_bar",
                x_label="year",
                y_label="publications",
                series_refs=tuple(s.subject for s in summary.series),
            )
        return ChartConfig(
            chart_type="bar",
            x_label="subject",
            y_label="publications",
            series_refs=tuple(plan.subjects),
        )
    if plan.intent is Intent.RANKING:
        return ChartConfig(
            chart_type="bar",
            x_label=plan.rank_dimension or "label",
            y_label="publications",
            series_refs=tuple(s.subject for s in summary.series) or tuple(plan.subjects),
        )
    return ChartConfig(
        chart_type="bar",
        x_label="subject",
        y_label="publications",
        series_refs=tuple(plan.subjects),
    )
