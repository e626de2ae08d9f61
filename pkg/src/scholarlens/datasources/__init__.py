"""Data access layer: aggregation contract, synthetic source, live adapter, oracle."""

from scholarlens.datasources.base import (
    MAX_YEAR_SPAN,
    DataSource,
    FacetBucket,
    SourceStats,
)
from scholarlens.datasources.crossref import (
    CrossrefSource,
    build_works_request,
    parse_works_response,
)
from scholarlens.datasources.oracle import brute_force_aggregate
from scholarlens.datasources.synthetic import (
    SYNTHETIC_RETRIEVED_AT,
    SYNTHETIC_SOURCE_NAME,
    SyntheticRecord,
    SyntheticSource,
    dump_records_jsonl,
    generate_synthetic,
)

__all__ = [
    "CrossrefSource",
    "DataSource",
    "FacetBucket",
    "MAX_YEAR_SPAN",
    "SYNTHETIC_RETRIEVED_AT",
    "SYNTHETIC_SOURCE_NAME",
    "SourceStats",
    "SyntheticRecord",
    "SyntheticSource",
    "brute_force_aggregate",
    "build_works_request",
    "dump_records_jsonl",
    "generate_synthetic",
    "parse_works_response",
]
