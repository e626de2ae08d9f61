"""Shared domain types, token accounting, and ledger arithmetic.

The pipeline orchestrator lives in scholarlens.core.pipeline and is not
re-exported here: it depends on every layer, and pulling it in at package
import would give the leaf types a cyclic import path.
"""

from scholarlens.core.errors import (
    PlanInvalidError,
    ProviderError,
    ScholarLensError,
    SourceError,
)
from scholarlens.core.ledger import ledger_total, summary_stats
from scholarlens.core.serialize import serialize_canonical
from scholarlens.core.tokens import estimate_tokens
from scholarlens.core.types import (
    K_MAX,
    MAX_LABEL_CHARS,
    MAX_POINTS,
    MAX_SERIES,
    MAX_SUBJECTS,
    ChartConfig,
    DataPoint,
    Intent,
    Narrative,
    PromptSpec,
    QueryPlan,
    RunLedger,
    RunRecord,
    Series,
    StatisticalSummary,
    SummaryMetadata,
    TimeRange,
    TokenUsage,
    UserQuery,
)

__all__ = [
    "ChartConfig",
    "DataPoint",
    "Intent",
    "K_MAX",
    "MAX_LABEL_CHARS",
    "MAX_POINTS",
    "MAX_SERIES",
    "MAX_SUBJECTS",
    "Narrative",
    "PlanInvalidError",
    "PromptSpec",
    "ProviderError",
    "QueryPlan",
    "RunLedger",
    "RunRecord",
    "ScholarLensError",
    "Series",
    "SourceError",
    "StatisticalSummary",
    "SummaryMetadata",
    "TimeRange",
    "TokenUsage",
    "UserQuery",
    "estimate_tokens",
    "ledger_total",
    "serialize_canonical",
    "summary_stats",
]
