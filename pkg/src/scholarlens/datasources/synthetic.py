"""Deterministic synthetic corpus for desk-scale verification.

Records are drawn from fixed vocabularies with a documented, self-contained
pseudorandom scheme (a vectorized splitmix64 finalizer over per-record,
per-channel counters). The same (seed, n) therefore yields the same corpus
on every platform and library version, which the oracle-equivalence and
invariance suites depend on.

Matching rule: a record matches a subject when the lowercased,
whitespace-split subject tokens intersect the record's keyword set. The
brute-force oracle implements the same rule independently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional

import numpy as np

from scholarlens.core.types import TimeRange
from scholarlens.datasources.base import (
    DataSource,
    FacetBucket,
    check_facet_args,
    check_year_span,
)

SYNTHETIC_SOURCE_NAME = "synthetic"
# Fixed logical retrieval time: keeps summaries byte-identical across runs.
SYNTHETIC_RETRIEVED_AT = "2020-01-01T00:00:00Z"

YEAR_MIN = 1990
YEAR_MAX = 2029
MAX_RECORDS = 10_000_000

VOCABULARY = (
    "algorithms", "astronomy", "batteries", "bioinformatics", "blockchain",
    "catalysis", "climate", "computing", "crispr", "cryptography",
    "cybersecurity", "deep", "ecology", "epidemiology", "gene",
    "genomics", "graphene", "imaging", "immunology", "learning",
    "linguistics", "machine", "materials", "medical", "nanotechnology",
    "networks", "neural", "optimization", "photonics", "polymers",
    "proteomics", "quantum", "research", "robotics", "semiconductors",
    "sensors", "solar", "superconductivity", "therapy", "vaccines",
)

VENUES = (
    "Acta Computationis",
    "Advances in Immunology Reports",
    "Annals of Genomic Medicine",
    "Annals of Optimization",
    "Archives of Molecular Science",
    "Biomedical Engineering Notes",
    "Chemistry of Polymers Letters",
    "Computational Biology Quarterly",
    "International Journal of Sensors",
    "Journal of Applied Computation",
    "Journal of Climate Dynamics",
    "Journal of Clinical Innovation",
    "Journal of Energy Materials",
    "Journal of Network Security",
    "Journal of Neural Systems",
    "Journal of Quantum Studies",
    "Journal of Robotic Science",
    "Journal of Secure Systems",
    "Journal of Statistical Learning",
    "Letters in Machine Intelligence",
    "Oceanic and Ecological Studies",
    "Photonics Research Letters",
    "Proceedings in Data Systems",
    "Review of Modern Materials",
    "Semiconductor Device Letters",
)

PUBLISHERS = (
    "Aldergate Press",
    "Boreal Scientific",
    "Cobalt Academic",
    "Delta Science House",
    "Everhart Publishing",
    "Fjord Open Press",
    "Granite Scholarly",
    "Harbor Academic Group",
    "Ironwood Journals",
    "Juniper Research Media",
)

WORK_TYPES = ("journal-article", "proceedings-article", "book-chapter")
# Cumulative shares: 60% journal articles, 25% proceedings, 15% chapters.
_WORK_TYPE_CDF = np.array([0.60, 0.85, 1.0])

_VOCAB_INDEX = {term: i for i, term in enumerate(VOCABULARY)}

# splitmix64 constants; the channel offset lives inline in _u01
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)

# Draw channels, in documented order: one independent stream per field.
_CH_YEAR = 0
_CH_KW_COUNT = 1
_CH_KW_SLOT0 = 2  # channels 2..5 are the four keyword slots
_CH_VENUE = 6
_CH_PUBLISHER = 7
_CH_WORK_TYPE = 8


@dataclass(frozen=True, slots=True)
class SyntheticRecord:
    """One synthetic corpus record; fields drawn from the fixed vocabularies."""

    year: int
    keywords: frozenset[str]
    venue: str
    publisher: str
    work_type: str

    def to_dict(self) -> dict:
        return {
            "year": self.year,
            "keywords": sorted(self.keywords),
            "venue": self.venue,
            "publisher": self.publisher,
            "work_type": self.work_type,
        }


def _finalize(z: np.ndarray) -> np.ndarray:
    z = z ^ (z >> np.uint64(30))
    z = z * _MIX1
    z = z ^ (z >> np.uint64(27))
    z = z * _MIX2
    return z ^ (z >> np.uint64(31))


def _u01(seed: int, channel: int, n: int) -> np.ndarray:
    """Uniform [0, 1) draws for records 0..n-1 on one channel."""
    idx = np.arange(1, n + 1, dtype=np.uint64)
    # seed + channel offset folded in python ints first: numpy warns on
    # scalar uint64 wraparound even though wrapping is exactly what we want
    base = (seed + 0xD6E8FEB86659FD93 * channel) & 0xFFFFFFFFFFFFFFFF
    with np.errstate(over="ignore"):
        z = np.uint64(base) + _GOLDEN * idx
        z = _finalize(_finalize(z))
    return (z >> np.uint64(11)).astype(np.float64) * (1.0 / (1 << 53))


def _uints(seed: int, channel: int, n: int, bound: int) -> np.ndarray:
    return np.minimum((_u01(seed, channel, n) * bound).astype(np.int64), bound - 1)


class _Columns:
    """Column-oriented view of a synthetic corpus, for vectorized scans."""

    def __init__(self, seed: int, n: int):
        if n < 0 or n > MAX_RECORDS:
            raise ValueError(f"record count must be 0..{MAX_RECORDS}")
        self.seed = seed
        self.n = n

        # Years 1990..2029 with weights 1..40: a mild upward publication trend.
        year_weights = np.arange(1, YEAR_MAX - YEAR_MIN + 2, dtype=np.float64)
        year_cdf = np.cumsum(year_weights) / year_weights.sum()
        self.years = YEAR_MIN + np.searchsorted(
            year_cdf, _u01(seed, _CH_YEAR, n), side="right"
        ).astype(np.int32)

        self.kw_counts = 1 + _uints(seed, _CH_KW_COUNT, n, 4)
        self.kw_slots = np.stack(
            [_uints(seed, _CH_KW_SLOT0 + j, n, len(VOCABULARY)) for j in range(4)],
            axis=1,
        )
        # Keyword bitmask per record (vocabulary has 40 terms, fits uint64).
        masks = np.zeros(n, dtype=np.uint64)
        for j in range(4):
            bit = np.uint64(1) << self.kw_slots[:, j].astype(np.uint64)
            masks |= np.where(j < self.kw_counts, bit, np.uint64(0))
        self.masks = masks

        self.venue_idx = _uints(seed, _CH_VENUE, n, len(VENUES)).astype(np.int16)
        self.publisher_idx = _uints(seed, _CH_PUBLISHER, n, len(PUBLISHERS)).astype(np.int16)
        self.type_idx = np.searchsorted(
            _WORK_TYPE_CDF, _u01(seed, _CH_WORK_TYPE, n), side="right"
        ).astype(np.int16)

    def materialize(self) -> list[SyntheticRecord]:
        records = []
        for i in range(self.n):
            k = int(self.kw_counts[i])
            keywords = frozenset(VOCABULARY[j] for j in self.kw_slots[i, :k])
            records.append(
                SyntheticRecord(
                    year=int(self.years[i]),
                    keywords=keywords,
                    venue=VENUES[self.venue_idx[i]],
                    publisher=PUBLISHERS[self.publisher_idx[i]],
                    work_type=WORK_TYPES[self.type_idx[i]],
                )
            )
        return records


def generate_synthetic(seed: int, n: int) -> list[SyntheticRecord]:
    """Generate the deterministic synthetic corpus for (seed, n)."""
    return _Columns(seed, n).materialize()


def dump_records_jsonl(records: list[SyntheticRecord], path: str | Path) -> None:
    """Debug dump: one JSON object per line, keywords sorted."""
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record.to_dict(), sort_keys=True) + "\n")


def subject_keyword_mask(subject: str) -> int:
    """Bitmask of vocabulary terms appearing in the subject's tokens."""
    mask = 0
    for token in subject.lower().split():
        idx = _VOCAB_INDEX.get(token)
        if idx is not None:
            mask |= 1 << idx
    return mask


class SyntheticSource(DataSource):
    """In-memory source that answers by scanning the full synthetic corpus.

    Every aggregation call is a fresh O(n) pass (vectorized), mirroring a
    source without server-side indexes; ``stats`` records the per-call
    request and scanned-record counts.
    """

    source_name = SYNTHETIC_SOURCE_NAME

    def __init__(self, seed: int, n: int):
        super().__init__()
        self.seed = seed
        self.n = n
        self._cols = _Columns(seed, n)
        self._records: Optional[list[SyntheticRecord]] = None

    @property
    def records(self) -> list[SyntheticRecord]:
        if self._records is None:
            self._records = self._cols.materialize()
        return self._records

    def retrieved_at(self) -> str:
        return SYNTHETIC_RETRIEVED_AT

    def dataset_size_estimate(self) -> int:
        self.stats.requests += 1
        return self.n

    def _match(self, subject: str) -> np.ndarray:
        if not subject.strip():
            raise ValueError("subject must be non-empty")
        self.stats.requests += 1
        self.stats.records_scanned += self.n
        mask = np.uint64(subject_keyword_mask(subject))
        return (self._cols.masks & mask) != 0

    def count_total(self, subject: str, time_range: Optional[TimeRange] = None) -> int:
        matched = self._match(subject)
        if time_range is not None:
            matched &= (self._cols.years >= time_range.from_year) & (
                self._cols.years <= time_range.until_year
            )
        return int(matched.sum())

    def yearly_counts(
        self, subject: str, from_year: int, until_year: int
    ) -> list[tuple[int, int]]:
        check_year_span(from_year, until_year)
        matched = self._match(subject)
        in_corpus = np.bincount(
            self._cols.years[matched] - YEAR_MIN, minlength=YEAR_MAX - YEAR_MIN + 1
        )
        out = []
        for year in range(from_year, until_year + 1):
            offset = year - YEAR_MIN
            count = int(in_corpus[offset]) if 0 <= offset < len(in_corpus) else 0
            out.append((year, count))
        return out

    def facet_counts(self, subject: str, dimension: str, limit: int) -> list[FacetBucket]:
        check_facet_args(dimension, limit)
        matched = self._match(subject)
        codes, labels = {
            "venue": (self._cols.venue_idx, VENUES),
            "publisher": (self._cols.publisher_idx, PUBLISHERS),
            "work_type": (self._cols.type_idx, WORK_TYPES),
        }[dimension]
        counts = np.bincount(codes[matched], minlength=len(labels))
        buckets = [
            FacetBucket(label=labels[i], count=int(counts[i]))
            for i in range(len(labels))
            if counts[i] > 0
        ]
        buckets.sort(key=lambda b: (-b.count, b.label))
        return buckets[:limit]


@lru_cache(maxsize=4)
def cached_synthetic_source(seed: int, n: int) -> SyntheticSource:
    """Reuse generated corpora across runs in one process (bench harness)."""
    return SyntheticSource(seed, n)
