"""Benchmark protocol: 20 queries, 5 runs each, against a naive baseline.

Pipeline runs use the deterministic offline backends (rule reasoner,
template synthesizer) so the protocol is reproducible without a network;
the naive baseline pushes raw serialized records through the provider,
which is exactly the cost the architecture exists to avoid. Statistics
cover completed runs only; failures are counted, never averaged in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from scholarlens.bench.cost_model import compute_savings
from scholarlens.bench.suite import SuiteEntry
from scholarlens.core.ledger import ledger_total, summary_stats
from scholarlens.core.pipeline import PipelineOptions, run_pipeline
from scholarlens.core.types import PromptSpec, TokenUsage, UserQuery
from scholarlens.datasources.base import DataSource
from scholarlens.datasources.synthetic import SyntheticRecord, generate_synthetic
from scholarlens.providers.base import LlmProvider

DEFAULT_RUNS_PER_QUERY = 5
NAIVE_RECORD_COUNT = 50
NAIVE_RECORD_SEED = 42

NAIVE_SYSTEM_PROMPT = (
    "Answer the user's question using the article records included in the "
    "message. Base every number on the records themselves."
)


@dataclass(frozen=True)
class BenchmarkReport:
    """Outcome of one full suite execution."""

    runs: list[dict]
    res_mean: float
    res_stddev: float
    naive_mean: float
    savings_fraction: float
    failed_count: int
    naive_by_query: dict[str, int]
    flags: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "runs": self.runs,
            "res_mean": self.res_mean,
            "res_stddev": self.res_stddev,
            "naive_mean": self.naive_mean,
            "savings_fraction": self.savings_fraction,
            "failed_count": self.failed_count,
            "naive_by_query": self.naive_by_query,
            "flags": self.flags,
        }


def serialize_records(records: list[SyntheticRecord]) -> str:
    return "\n".join(json.dumps(r.to_dict(), sort_keys=True) for r in records)


def run_naive_baseline(
    query: UserQuery, records: list[SyntheticRecord], provider: LlmProvider
) -> TokenUsage:
    """One baseline call: the question plus every raw record, verbatim."""
    if not records:
        raise ValueError("naive baseline needs at least one record")
    prompt = PromptSpec(
        system_prompt=NAIVE_SYSTEM_PROMPT,
        user_content=f"Question: {query.text}\n\nRecords:\n{serialize_records(records)}",
        tag="naive",
    )
    return provider.complete(prompt).usage


def run_benchmark(
    suite: list[SuiteEntry],
    runs_per_query: int,
    source: DataSource,
    provider: LlmProvider,
) -> BenchmarkReport:
    """Execute the full protocol and aggregate per-layer token statistics."""
    if runs_per_query < 1:
        raise ValueError("runs_per_query must be >= 1")

    options = PipelineOptions(reasoner_mode="rule", synthesizer_mode="template")
    naive_records = generate_synthetic(NAIVE_RECORD_SEED, NAIVE_RECORD_COUNT)

    runs: list[dict] = []
    flags: list[str] = []
    for entry in sorted(suite, key=lambda e: e.id):
        query = UserQuery(entry.text)
        failures = 0
        for _ in range(runs_per_query):
            record = run_pipeline(query, source, options=options)
            ledger = record.ledger
            runs.append(
                {
                    "query": entry.id,
                    "intent": record.plan.intent.value if record.plan else entry.intent,
                    "ledger_total": ledger_total(ledger),
                    "status": record.status,
                    "reasoner_tokens": ledger.reasoner.total,
                    "executor_tokens": ledger.executor.total,
                    "synthesizer_tokens": ledger.synthesizer.total,
                }
            )
            if record.status != "completed":
                failures += 1
        if failures == runs_per_query:
            flags.append(f"all runs failed: {entry.id}")

    completed = [r["ledger_total"] for r in runs if r["status"] == "completed"]
    failed_count = len(runs) - len(completed)
    if completed:
        stats = summary_stats(completed)
        res_mean, res_stddev = stats["mean"], stats["stddev"]
    else:
        res_mean, res_stddev = 0.0, 0.0
        flags.append("no completed runs")

    naive_by_query: dict[str, int] = {}
    for entry in sorted(suite, key=lambda e: e.id):
        usage = run_naive_baseline(UserQuery(entry.text), naive_records, provider)
        naive_by_query[entry.id] = usage.total
    naive_stats = summary_stats(list(naive_by_query.values()))
    naive_mean = naive_stats["mean"]

    savings = compute_savings(res_mean, naive_mean) if naive_mean > 0 else 0.0
    if not 0.0 <= savings <= 1.0:
        flags.append(f"savings outside [0,1]: {savings:.4f}")

    return BenchmarkReport(
        runs=runs,
        res_mean=res_mean,
        res_stddev=res_stddev,
        naive_mean=naive_mean,
        savings_fraction=savings,
        failed_count=failed_count,
        naive_by_query=naive_by_query,
        flags=flags,
    )
