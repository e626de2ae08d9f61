"""Domain types shared by every layer of the pipeline.

All types are immutable value objects. Constructors enforce structural
invariants; the summary size budget (K_MAX) is intentionally NOT enforced
here because the executor's size-contract pass must be able to receive
oversized intermediate summaries and shrink them.
"""

from __future__ import annotations

import datetime as dt
import enum
from dataclasses import dataclass, field
from typing import Any, Optional

from scholarlens.core.errors import PlanInvalidError

# Hard budget for the canonical summary serialization, in estimated tokens.
K_MAX = 800
# Per-series point cap and series-count cap, chosen so enforced summaries
# always fit under K_MAX.
MAX_POINTS = 50
MAX_SERIES = 5
MAX_SUBJECTS = 5
MAX_LABEL_CHARS = 80
MAX_QUERY_CHARS = 1000
MAX_SUBJECT_CHARS = 120
MIN_YEAR = 1600
MAX_TOP_N = 20

RANK_DIMENSIONS = ("venue", "publisher", "work_type")


def current_year() -> int:
    return dt.date.today().year


def iso_utc(moment: dt.datetime) -> str:
    """Format a datetime as an ISO-8601 UTC string with a Z suffix."""
    if moment.tzinfo is None:
        moment = moment.replace(tzinfo=dt.timezone.utc)
    return moment.astimezone(dt.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def utc_now_iso() -> str:
    return iso_utc(dt.datetime.now(dt.timezone.utc))


@dataclass(frozen=True)
class UserQuery:
    """A natural-language question, 1..1000 characters, non-blank."""

    text: str

    def __post_init__(self) -> None:
        if not self.text.strip():
            raise ValueError("query text must be non-empty after trimming")
        if len(self.text) > MAX_QUERY_CHARS:
            raise ValueError(f"query text exceeds {MAX_QUERY_CHARS} characters")


class Intent(str, enum.Enum):
    """The closed set of supported analysis intents."""

    TREND = "trend"
    COMPARISON = "comparison"
    RANKING = "ranking"
    STATISTICS = "statistics"


@dataclass(frozen=True)
class TimeRange:
    from_year: int
    until_year: int

    def __post_init__(self) -> None:
        if not (MIN_YEAR <= self.from_year <= self.until_year <= current_year() + 1):
            raise PlanInvalidError(
                f"year range {self.from_year}..{self.until_year} out of bounds"
            )

    def to_dict(self) -> dict[str, int]:
        return {"from_year": self.from_year, "until_year": self.until_year}


@dataclass(frozen=True)
class QueryPlan:
    """Structured query plan: the contract between reasoner and executor.

    Invariants enforced here:
      * 1..5 subjects, each trimmed and 1..120 chars
      * trend plans carry a time range
      * comparison plans have at least two subjects
      * ranking plans carry top_n (1..20) and a rank dimension
      * top_n / rank_dimension are normalized away for non-ranking intents
    """

    intent: Intent
    subjects: tuple[str, ...]
    time_range: Optional[TimeRange] = None
    top_n: Optional[int] = None
    rank_dimension: Optional[str] = None

    def __post_init__(self) -> None:
        subjects = tuple(s.strip() for s in self.subjects)
        if not subjects or len(subjects) > MAX_SUBJECTS:
            raise PlanInvalidError(f"plan needs 1..{MAX_SUBJECTS} subjects")
        for s in subjects:
            if not s or len(s) > MAX_SUBJECT_CHARS:
                raise PlanInvalidError("subjects must be 1..120 chars after trimming")
        object.__setattr__(self, "subjects", subjects)

        if self.intent is Intent.TREND and self.time_range is None:
            raise PlanInvalidError("trend plans require a time range")
        if self.intent is Intent.COMPARISON and len(subjects) < 2:
            raise PlanInvalidError("comparison plans require at least two subjects")
        if self.intent is Intent.RANKING:
            if self.top_n is None or self.rank_dimension is None:
                raise PlanInvalidError("ranking plans require top_n and rank_dimension")
            if not (1 <= self.top_n <= MAX_TOP_N):
                raise PlanInvalidError(f"top_n must be 1..{MAX_TOP_N}")
            if self.rank_dimension not in RANK_DIMENSIONS:
                raise PlanInvalidError(f"unknown rank dimension {self.rank_dimension!r}")
        else:
            # Meaningless outside ranking; normalize so equal plans serialize equally.
            object.__setattr__(self, "top_n", None)
            object.__setattr__(self, "rank_dimension", None)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "intent": self.intent.value,
            "subjects": list(self.subjects),
        }
        if self.time_range is not None:
            out["time_range"] = self.time_range.to_dict()
        if self.top_n is not None:
            out["top_n"] = self.top_n
        if self.rank_dimension is not None:
            out["rank_dimension"] = self.rank_dimension
        return out


@dataclass(frozen=True)
class DataPoint:
    """One labeled count inside a series."""

    label: str
    value: int

    def __post_init__(self) -> None:
        if not self.label:
            raise ValueError("data point label must be non-empty")
        if self.value < 0:
            raise ValueError("data point value must be >= 0")

    def to_dict(self) -> dict[str, Any]:
        return {"label": self.label, "value": self.value}


@dataclass(frozen=True)
class Series:
    """Ordered data points for one subject.

    Length and label-width caps are applied by the executor's size
    contract, not here, so oversized raw aggregations remain representable.
    """

    subject: str
    points: tuple[DataPoint, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "points": [p.to_dict() for p in self.points],
        }


@dataclass(frozen=True)
class SummaryMetadata:
    source_name: str
    dataset_size_estimate: int
    retrieved_at: str  # ISO-8601 UTC
    plan_echo: QueryPlan

    def __post_init__(self) -> None:
        if self.dataset_size_estimate < 0:
            raise ValueError("dataset size estimate must be >= 0")

    def to_dict(self) -> dict[str, Any]:
        return {
            "source_name": self.source_name,
            "dataset_size_estimate": self.dataset_size_estimate,
            "retrieved_at": self.retrieved_at,
            "plan_echo": self.plan_echo.to_dict(),
        }


@dataclass(frozen=True)
class StatisticalSummary:
    """The fixed-size statistical summary handed to the synthesizer.

    Holds only aggregate counts and labels: there is no field anywhere in
    this structure that could carry a record title, author, or identifier.
    Every subject that appears in a series must appear in totals.
    """

    series: tuple[Series, ...]
    totals: dict[str, int]
    metadata: SummaryMetadata

    def __post_init__(self) -> None:
        for value in self.totals.values():
            if value < 0:
                raise ValueError("totals must be >= 0")
        for s in self.series:
            if s.subject not in self.totals:
                raise ValueError(f"series subject {s.subject!r} missing from totals")

    def to_dict(self) -> dict[str, Any]:
        return {
            "series": [s.to_dict() for s in self.series],
            "totals": dict(self.totals),
            "metadata": self.metadata.to_dict(),
        }


CHART_TYPES = ("line", "bar", "grouped_bar")


@dataclass(frozen=True)
class ChartConfig:
    chart_type: str
    x_label: str
    y_label: str
    series_refs: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.chart_type not in CHART_TYPES:
            raise ValueError(f"unknown chart type {self.chart_type!r}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "chart_type": self.chart_type,
            "x_label": self.x_label,
            "y_label": self.y_label,
            "series_refs": list(self.series_refs),
        }


@dataclass(frozen=True)
class Narrative:
    text: str
    chart: Optional[ChartConfig] = None

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("narrative text must be non-empty")

    def to_dict(self) -> dict[str, Any]:
        return {
            "text": self.text,
            "chart": self.chart.to_dict() if self.chart else None,
        }


@dataclass(frozen=True)
class TokenUsage:
    """Input/output token counts for one layer.

    ``estimated`` is True when the numbers come from the offline estimator
    rather than a provider's reported usage; estimated figures are never
    passed off as measured ones.
    """

    input_tokens: int = 0
    output_tokens: int = 0
    estimated: bool = False

    def __post_init__(self) -> None:
        if self.input_tokens < 0 or self.output_tokens < 0:
            raise ValueError("token counts must be >= 0")

    @property
    def total(self) -> int:
        return self.input_tokens + self.output_tokens

    def to_dict(self) -> dict[str, Any]:
        return {
            "input_tokens": self.input_tokens,
            "output_tokens": self.output_tokens,
            "estimated": self.estimated,
        }


@dataclass(frozen=True)
class RunLedger:
    """Per-layer token accounting. The executor entry is always (0, 0)."""

    reasoner: TokenUsage = field(default_factory=TokenUsage)
    executor: TokenUsage = field(default_factory=TokenUsage)
    synthesizer: TokenUsage = field(default_factory=TokenUsage)

    def __post_init__(self) -> None:
        if self.executor.input_tokens or self.executor.output_tokens:
            raise ValueError("executor never consumes LLM tokens")

    def to_dict(self) -> dict[str, Any]:
        return {
            "reasoner": self.reasoner.to_dict(),
            "executor": self.executor.to_dict(),
            "synthesizer": self.synthesizer.to_dict(),
        }


@dataclass(frozen=True)
class PromptSpec:
    """One completion request: a fixed system prompt plus user content.

    ``tag`` names the call site ("reasoner" or "synthesizer") so mock
    providers can fall back to a schema-valid default response.
    """

    system_prompt: str
    user_content: str
    tag: str = ""


@dataclass(frozen=True)
class RunRecord:
    """Everything about one pipeline run, persisted for transparency."""

    run_id: str
    query: UserQuery
    status: str  # "completed" | "failed"
    started_at: str
    finished_at: str
    ledger: RunLedger = field(default_factory=RunLedger)
    plan: Optional[QueryPlan] = None
    summary: Optional[StatisticalSummary] = None
    narrative: Optional[Narrative] = None
    failure_reason: Optional[str] = None

    def __post_init__(self) -> None:
        if self.status not in ("completed", "failed"):
            raise ValueError(f"unknown run status {self.status!r}")
        if self.status == "completed" and not (self.plan and self.summary and self.narrative):
            raise ValueError("completed runs must carry plan, summary, and narrative")

    def to_dict(self) -> dict[str, Any]:
        # ledger_total travels with the record so displays never have to
        # derive numbers the payload did not state
        total = self.ledger.reasoner.total + self.ledger.executor.total
        total += self.ledger.synthesizer.total
        return {
            "run_id": self.run_id,
            "query": {"text": self.query.text},
            "status": self.status,
            "started_at": self.started_at,
            "finished_at": self.finished_at,
            "ledger": self.ledger.to_dict(),
            "ledger_total": total,
            "plan": self.plan.to_dict() if self.plan else None,
            "summary": self.summary.to_dict() if self.summary else None,
            "narrative": self.narrative.to_dict() if self.narrative else None,
            "failure_reason": self.failure_reason,
        }
