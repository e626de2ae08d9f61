"""Deterministic rule-based query parsing.

Ordered grammar, first match wins:
  1. comparison markers ("compare", " vs ", "versus")
  2. ranking markers ("top", "most", "leading")
  3. trend markers ("trend", "grow*", "over time", "per year") or an
     explicit year range ("from 2015 to 2024", "2015-2024", "between")
  4. otherwise statistics

Subject text is what remains after removing interrogative lead-ins, year
phrases, and intent markers, with generic filler words stripped from the
phrase edges only (inner words always survive, so "gene therapy" or
"machine learning" stay intact). Everything is lowercase-normalized; the
same question always yields the same plan.
"""

from __future__ import annotations

import re
from typing import Optional

from scholarlens.core.errors import PlanInvalidError
from scholarlens.core.types import (
    MAX_SUBJECTS,
    MAX_TOP_N,
    Intent,
    QueryPlan,
    TimeRange,
    UserQuery,
    current_year,
)

_YEAR = r"(1[6-9]\d{2}|2\d{3})"
_RANGE_PATTERNS = (
    re.compile(rf"\bfrom\s+{_YEAR}\s+(?:to|until|through)\s+{_YEAR}\b"),
    re.compile(rf"\bbetween\s+{_YEAR}\s+and\s+{_YEAR}\b"),
    re.compile(rf"\b{_YEAR}\s*[-–]\s*{_YEAR}\b"),
)
_SINCE_PATTERN = re.compile(rf"\bsince\s+{_YEAR}\b")
_IN_YEAR_PATTERN = re.compile(rf"\bin\s+{_YEAR}\b")

_COMPARISON_MARK = re.compile(r"\bcompare\b|\bcomparison\b|\bversus\b|\bvs\b\.?")
_RANKING_MARK = re.compile(r"\btop\b|\bmost\b|\bleading\b")
_TREND_MARK = re.compile(r"\btrends?\b|\bgrow\w*\b|\bover time\b|\bper year\b")

_COMPARISON_SPLIT = re.compile(r"\s+versus\s+|\s+vs\b\.?\s+|\s*,\s*|\s+and\s+|\s+with\s+")
_RANKING_MARK_STRIP = re.compile(r"\btop\s*\d*\b|\bmost\b|\bleading\b")
_INT_PATTERN = re.compile(r"\b\d+\b")

# checked in order: the more specific publisher word wins over venue words
_DIMENSION_PATTERNS = (
    (re.compile(r"\bpublishers?\b"), "publisher"),
    (re.compile(r"\bjournals?\b|\bvenues?\b"), "venue"),
    (re.compile(r"\b(?:work|document)\s+types?\b|\btypes?\b"), "work_type"),
)

# multiword lead-ins first so "how many" wins over "how"
_LEAD_INS = (
    "tell me about", "how many", "how much", "how has", "how have", "how did",
    "what are", "what is", "what was", "what were", "show me", "give me",
    "tell me", "compare", "which", "what", "show", "list", "count", "find",
    "how",
)

_EDGE_FILLERS = frozenset({
    "a", "about", "active", "activity", "an", "annual", "annually", "are",
    "article", "articles", "been", "by", "changed", "count", "counts",
    "coverage", "evolved", "exist", "exists", "fewer", "field", "fields",
    "for", "from", "grew", "grow", "grown", "growth", "had", "has", "have",
    "in", "interest", "is", "less", "literature", "more", "number",
    "numbers", "of", "on", "output", "over", "paper", "papers", "per",
    "popularity", "produce", "produces", "publication", "publications",
    "publish", "published", "publishes", "publishing", "research", "studies",
    "study", "the", "there", "time", "to", "topic", "topics", "total",
    "totals", "trend", "trends", "volume", "was", "were", "which", "work",
    "works", "year", "years",
})


def _strip_lead_ins(text: str) -> str:
    changed = True
    while changed:
        changed = False
        for lead in _LEAD_INS:
            if text == lead or text.startswith(lead + " "):
                text = text[len(lead):].strip()
                changed = True
    return text


def _clean_subject(fragment: str) -> str:
    tokens = [t.strip(".,;:'\"()") for t in fragment.split()]
    tokens = [t for t in tokens if t]
    while tokens and tokens[0] in _EDGE_FILLERS:
        tokens.pop(0)
    while tokens and tokens[-1] in _EDGE_FILLERS:
        tokens.pop()
    return " ".join(tokens)


def _extract_years(text: str) -> tuple[str, Optional[TimeRange], bool]:
    """Pull a year phrase out of the text: (remainder, range, explicit?)."""
    for pattern in _RANGE_PATTERNS:
        m = pattern.search(text)
        if m:
            rng = TimeRange(int(m.group(1)), int(m.group(2)))
            return text[: m.start()] + " " + text[m.end():], rng, True
    m = _SINCE_PATTERN.search(text)
    if m:
        rng = TimeRange(int(m.group(1)), current_year())
        return text[: m.start()] + " " + text[m.end():], rng, False
    m = _IN_YEAR_PATTERN.search(text)
    if m:
        year = int(m.group(1))
        return text[: m.start()] + " " + text[m.end():], TimeRange(year, year), False
    return text, None, False


def _default_trend_range() -> TimeRange:
    # Last ten full calendar years; the current year is still accumulating.
    return TimeRange(current_year() - 10, current_year() - 1)


def _require_subject(fragment: str) -> str:
    subject = _clean_subject(_strip_lead_ins(fragment.strip()))
    if not subject:
        raise PlanInvalidError("no subject could be extracted from the question")
    return subject


def rule_based_parse(query: UserQuery) -> QueryPlan:
    text = query.text.lower().strip()
    text = re.sub(r"[?!.\s]+$", "", text)

    if _COMPARISON_MARK.search(text):
        remainder, rng, _ = _extract_years(text)
        remainder = _strip_lead_ins(remainder.strip())
        parts = [_clean_subject(p) for p in _COMPARISON_SPLIT.split(remainder)]
        subjects = tuple(p for p in parts if p)[:MAX_SUBJECTS]
        if len(subjects) < 2:
            raise PlanInvalidError("comparison needs at least two subjects")
        return QueryPlan(Intent.COMPARISON, subjects, time_range=rng)

    if _RANKING_MARK.search(text):
        remainder, rng, _ = _extract_years(text)
        top_n = 10
        for token in _INT_PATTERN.findall(remainder):
            if 1 <= int(token) <= MAX_TOP_N:
                top_n = int(token)
                break
        dimension = "venue"
        for pattern, name in _DIMENSION_PATTERNS:
            if pattern.search(remainder):
                dimension = name
                remainder = pattern.sub(" ", remainder)
                break
        remainder = _RANKING_MARK_STRIP.sub(" ", remainder)
        subject = _require_subject(remainder)
        return QueryPlan(
            Intent.RANKING, (subject,), time_range=rng,
            top_n=top_n, rank_dimension=dimension,
        )

    remainder, rng, explicit_range = _extract_years(text)
    if _TREND_MARK.search(text) or explicit_range:
        subject = _require_subject(remainder)
        return QueryPlan(Intent.TREND, (subject,), time_range=rng or _default_trend_range())

    subject = _require_subject(remainder)
    return QueryPlan(Intent.STATISTICS, (subject,), time_range=rng)
