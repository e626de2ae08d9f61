import os
import re

import pytest

from scholarlens.core.types import (
    DataPoint,
    Intent,
    QueryPlan,
    Series,
    StatisticalSummary,
    SummaryMetadata,
    TimeRange,
    current_year,
)
from scholarlens.datasources.synthetic import SyntheticSource, generate_synthetic

LIVE_ENABLED = os.environ.get("SCHOLARLENS_LIVE_TESTS") == "1"


def pytest_collection_modifyitems(config, items):
    skip_live = pytest.mark.skip(reason="set SCHOLARLENS_LIVE_TESTS=1 to run networked tests")
    if not LIVE_ENABLED:
        for item in items:
            if "live" in item.keywords:
                item.add_marker(skip_live)


@pytest.fixture(scope="session")
def small_source():
    return SyntheticSource(42, 1000)


@pytest.fixture(scope="session")
def medium_source():
    return SyntheticSource(42, 10_000)


@pytest.fixture(scope="session")
def small_records():
    return generate_synthetic(42, 1000)


def make_summary(plan=None, series=(), totals=None, size_estimate=1000):
    """Hand-built summary for synthesizer and contract tests."""
    if plan is None:
        plan = QueryPlan(intent=Intent.STATISTICS, subjects=("research",))
    return StatisticalSummary(
        series=list(series),
        totals=dict(totals or {}),
        metadata=SummaryMetadata(
            source_name="synthetic",
            dataset_size_estimate=size_estimate,
            retrieved_at="2020-01-01T00:00:00Z",
            plan_echo=plan,
        ),
    )


def year_series(subject, pairs):
    return Series(
        subject=subject,
        points=[DataPoint(label=str(y), value=v) for y, v in pairs],
    )


@pytest.fixture
def trend_plan():
    return QueryPlan(
        intent=Intent.TREND,
        subjects=("quantum computing",),
        time_range=TimeRange(2015, 2024),
    )


def random_plan(rng):
    """Draw one valid plan; the vocabulary mixes known and unmatched terms."""
    intent = rng.choice(list(Intent))
    vocabulary = ("graphene", "quantum computing", "crispr", "machine learning",
                  "vaccines", "cybersecurity", "research", "unknownword")
    n_subjects = 2 if intent is Intent.COMPARISON else rng.choice((1, 1, 1, 2))
    subjects = tuple(rng.sample(vocabulary, max(n_subjects, 2 if intent is Intent.COMPARISON else 1)))
    kwargs = {}
    if intent is Intent.TREND or rng.random() < 0.5:
        y1 = rng.randint(1990, current_year())
        y2 = rng.randint(y1, current_year())
        kwargs["time_range"] = TimeRange(y1, y2)
    if intent is Intent.RANKING:
        kwargs["top_n"] = rng.randint(1, 20)
        kwargs["rank_dimension"] = rng.choice(("venue", "publisher", "work_type"))
    return QueryPlan(intent=intent, subjects=subjects, **kwargs)


DIGIT_RUN = re.compile(r"\d+")
# percent deltas and ratio multipliers are derived figures, excluded by contract
DERIVED_FIGURES = re.compile(r"[+-]?\d+(?:\.\d)?%|\d+(?:\.\d)?×")


def allowed_numbers(summary):
    allowed = set()
    for value in summary.totals.values():
        allowed.add(str(value))
    for series in summary.series:
        for point in series.points:
            allowed.add(str(point.value))
            allowed.update(DIGIT_RUN.findall(point.label))
    plan = summary.metadata.plan_echo
    if plan.time_range:
        allowed.add(str(plan.time_range.from_year))
        allowed.add(str(plan.time_range.until_year))
    if plan.top_n:
        allowed.add(str(plan.top_n))
    return allowed


def assert_narrative_grounded(summary, text):
    stripped = DERIVED_FIGURES.sub("", text)
    allowed = allowed_numbers(summary)
    for run in DIGIT_RUN.findall(stripped):
        assert run in allowed, f"ungrounded number {run!r} in {text!r}"
