"""Hand-checked cases for the brute-force aggregation reference."""

from scholarlens.core.types import Intent, QueryPlan, TimeRange
from scholarlens.datasources.oracle import brute_force_aggregate
from scholarlens.datasources.synthetic import SyntheticRecord


def record(year=2020, keywords=("graphene",), venue="V1", publisher="P1",
           work_type="journal-article"):
    return SyntheticRecord(
        year=year,
        keywords=frozenset(keywords),
        venue=venue,
        publisher=publisher,
        work_type=work_type,
    )


def test_single_record_trend_window():
    plan = QueryPlan(
        intent=Intent.TREND, subjects=("graphene",), time_range=TimeRange(2019, 2021)
    )
    summary = brute_force_aggregate([record(year=2020)], plan)
    assert len(summary.series) == 1
    assert [(p.label, p.value) for p in summary.series[0].points] == [
        ("2019", 0),
        ("2020", 1),
        ("2021", 0),
    ]
    assert summary.totals == {"graphene": 1}


def test_comparison_unknown_subjects_all_zero():
    plan = QueryPlan(intent=Intent.COMPARISON, subjects=("aaa", "bbb"))
    summary = brute_force_aggregate([record(), record(year=2021)], plan)
    assert summary.totals == {"aaa": 0, "bbb": 0}
    assert not summary.series


def test_ranking_groups_and_orders_buckets():
    records = [
        record(venue="B venue"),
        record(venue="A venue"),
        record(venue="B venue"),
        record(keywords=("other",), venue="C venue"),
    ]
    plan = QueryPlan(
        intent=Intent.RANKING, subjects=("graphene",), top_n=10, rank_dimension="venue"
    )
    summary = brute_force_aggregate(records, plan)
    assert [(p.label, p.value) for p in summary.series[0].points] == [
        ("B venue", 2),
        ("A venue", 1),
    ]
    assert summary.totals == {"graphene": 3}


def test_ranking_tie_break_by_label():
    records = [record(venue="Zeta"), record(venue="Alpha")]
    plan = QueryPlan(
        intent=Intent.RANKING, subjects=("graphene",), top_n=10, rank_dimension="venue"
    )
    summary = brute_force_aggregate(records, plan)
    assert [p.label for p in summary.series[0].points] == ["Alpha", "Zeta"]


def test_statistics_includes_work_type_breakdown():
    records = [
        record(work_type="journal-article"),
        record(work_type="journal-article"),
        record(work_type="book-chapter"),
    ]
    plan = QueryPlan(intent=Intent.STATISTICS, subjects=("graphene",))
    summary = brute_force_aggregate(records, plan)
    assert summary.totals == {"graphene": 3}
    assert [(p.label, p.value) for p in summary.series[0].points] == [
        ("journal-article", 2),
        ("book-chapter", 1),
    ]


def test_statistics_with_year_filter_scopes_totals_only():
    records = [record(year=2019), record(year=2020), record(year=2021)]
    plan = QueryPlan(
        intent=Intent.STATISTICS, subjects=("graphene",), time_range=TimeRange(2020, 2020)
    )
    summary = brute_force_aggregate(records, plan)
    assert summary.totals == {"graphene": 1}
    # the work-type breakdown is unfiltered, mirroring the facet contract
    assert summary.series[0].points[0].value == 3


def test_multi_token_subject_matches_any_token():
    records = [record(keywords=("quantum",)), record(keywords=("computing",))]
    plan = QueryPlan(intent=Intent.STATISTICS, subjects=("quantum computing",))
    summary = brute_force_aggregate(records, plan)
    assert summary.totals == {"quantum computing": 2}


def test_metadata_reports_corpus_size():
    plan = QueryPlan(intent=Intent.STATISTICS, subjects=("graphene",))
    summary = brute_force_aggregate([record()] * 7, plan)
    assert summary.metadata.dataset_size_estimate == 7
    assert summary.metadata.source_name == "synthetic"
    assert summary.metadata.plan_echo == plan
