"""The aggregation contract every data source implements.

Sources answer counting questions only. No operation ever returns
record-level content (titles, authors, identifiers): just counts and the
labels they are grouped under.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass, field
from typing import Optional

from scholarlens.core.types import TimeRange, utc_now_iso

# Longest per-year window a single yearly_counts call may cover.
MAX_YEAR_SPAN = 50


@dataclass(frozen=True)
class FacetBucket:
    """One group label with its count."""

    label: str
    count: int

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError("facet count must be >= 0")


@dataclass
class SourceStats:
    """Counters witnessing where the computational load actually lands.

    ``requests`` counts aggregation calls; ``records_scanned`` counts the
    records a call had to examine (zero for server-side aggregation).
    """

    requests: int = 0
    records_scanned: int = 0

    def reset(self) -> None:
        self.requests = 0
        self.records_scanned = 0


class DataSource(abc.ABC):
    """Count-only access to a corpus."""

    source_name: str = "unnamed"

    def __init__(self) -> None:
        self.stats = SourceStats()

    @abc.abstractmethod
    def count_total(self, subject: str, time_range: Optional[TimeRange] = None) -> int:
        """Number of records matching ``subject`` (within the range, if given)."""

    @abc.abstractmethod
    def yearly_counts(
        self, subject: str, from_year: int, until_year: int
    ) -> list[tuple[int, int]]:
        """One (year, count) pair per year, ascending. Span capped at 50 years."""

    @abc.abstractmethod
    def facet_counts(self, subject: str, dimension: str, limit: int) -> list[FacetBucket]:
        """Top ``limit`` buckets by count desc, ties broken by label asc."""

    @abc.abstractmethod
    def dataset_size_estimate(self) -> int:
        """Total number of records in the corpus."""

    def retrieved_at(self) -> str:
        """Timestamp stamped into summaries built from this source."""
        return utc_now_iso()


def check_year_span(from_year: int, until_year: int) -> None:
    if from_year > until_year:
        raise ValueError("from_year must not exceed until_year")
    if until_year - from_year + 1 > MAX_YEAR_SPAN:
        raise ValueError(f"year span exceeds {MAX_YEAR_SPAN} years")


def check_facet_args(dimension: str, limit: int) -> None:
    if dimension not in ("venue", "publisher", "work_type"):
        raise ValueError(f"unknown facet dimension {dimension!r}")
    if not (1 <= limit <= 20):
        raise ValueError("facet limit must be 1..20")
