"""Deterministic template narratives.

Every bare number in the generated text is copied from the summary; the
only derived figures are percentage changes (suffixed %) and volume ratios
(suffixed x-mark), both rounded half-up to one decimal. That is the whole
trick for making "no invented numbers" a testable property rather than a
hope.
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal
from typing import Optional

from scholarlens.core.types import Intent, Narrative, Series, StatisticalSummary
from scholarlens.synthesizer.charts import build_chart_config

EMPTY_RESULT_TEXT = "No matching publications were found for the requested subjects."

_DIMENSION_WORDS = {
    "venue": "venues",
    "publisher": "publishers",
    "work_type": "work types",
}


def _percent_change(first: int, last: int) -> Optional[str]:
    if first == 0:
        return None
    pct = (Decimal(last - first) * 100 / Decimal(first)).quantize(
        Decimal("0.1"), rounding=ROUND_HALF_UP
    )
    sign = "+" if pct >= 0 else ""
    return f"{sign}{pct}%"


def _ratio(larger: int, smaller: int) -> str:
    r = (Decimal(larger) / Decimal(smaller)).quantize(
        Decimal("0.1"), rounding=ROUND_HALF_UP
    )
    return f"{r}×"


def _trend_sentence(series: Series) -> str:
    first, last = series.points[0], series.points[-1]
    if len(series.points) == 1:
        return f"Publications on {series.subject} in {first.label}: {first.value}."
    change = _percent_change(first.value, last.value)
    if change is None:
        change = "up from zero" if last.value > 0 else "flat at zero"
    return (
        f"Publications on {series.subject} went from {first.value} in {first.label} "
        f"to {last.value} in {last.label} ({change})."
    )


def _totals_listing(summary: StatisticalSummary) -> str:
    plan = summary.metadata.plan_echo
    parts = [f"{s}: {summary.totals[s]}" for s in plan.subjects if s in summary.totals]
    return "Totals over the queried range: " + "; ".join(parts) + "."


def _comparison_verdict(summary: StatisticalSummary) -> Optional[str]:
    plan = summary.metadata.plan_echo
    ordered = [(s, summary.totals[s]) for s in plan.subjects if s in summary.totals]
    if len(ordered) < 2:
        return None
    top = max(ordered, key=lambda kv: kv[1])
    bottom = min(ordered, key=lambda kv: kv[1])
    if top[1] == bottom[1]:
        return "The subjects are tied."
    if bottom[1] == 0:
        return f"{top[0]} leads; {bottom[0]} has no matching publications."
    return f"{top[0]} has {_ratio(top[1], bottom[1])} the volume of {bottom[0]}."


def template_narrative(summary: StatisticalSummary) -> Narrative:
    plan = summary.metadata.plan_echo
    if not summary.series and all(v == 0 for v in summary.totals.values()):
        return Narrative(text=EMPTY_RESULT_TEXT, chart=None)

    sentences: list[str] = []
    if plan.intent is Intent.TREND:
        sentences.extend(_trend_sentence(s) for s in summary.series)
        sentences.append(_totals_listing(summary))
    elif plan.intent is Intent.COMPARISON:
        sentences.append(_totals_listing(summary))
        verdict = _comparison_verdict(summary)
        if verdict:
            sentences.append(verdict)
        sentences.extend(_trend_sentence(s) for s in summary.series)
    elif plan.intent is Intent.RANKING:
        dimension = _DIMENSION_WORDS.get(plan.rank_dimension or "", "entries")
        if summary.series:
            ranked = summary.series[0]
            listing = ", ".join(f"{p.label} ({p.value})" for p in ranked.points)
            sentences.append(
                f"Leading {dimension} for {ranked.subject}: {listing}."
            )
        else:
            sentences.append(f"No {dimension} breakdown matched the request.")
        sentences.append(_totals_listing(summary))
    else:
        sentences.append(_totals_listing(summary))
        if summary.series:
            breakdown = summary.series[0]
            listing = "; ".join(f"{p.label}: {p.value}" for p in breakdown.points)
            sentences.append(f"By work type for {breakdown.subject}: {listing}.")

    return Narrative(text=" ".join(sentences), chart=build_chart_config(summary))
