"""Sequential pipeline: reasoner, executor, synthesizer, in that order.

Each layer runs strictly after the previous one; the synthesizer call sees
only the statistical summary (plus its fixed system prompt), never anything
the executor scanned. Lifecycle events fire in a fixed order so observers
can reconstruct exactly what crossed each layer boundary.

Offline modes ("rule" reasoner, "template" synthesizer) still charge the
ledger what an equivalent model call would cost under the shared estimator,
flagged as estimated, so token accounting is exercised end to end without
a network.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass
from typing import Callable, Optional

from scholarlens.core.errors import ScholarLensError
from scholarlens.core.serialize import serialize_canonical, serialize_plan
from scholarlens.core.tokens import estimate_tokens
from scholarlens.core.types import (
    Narrative,
    QueryPlan,
    RunLedger,
    RunRecord,
    StatisticalSummary,
    TokenUsage,
    UserQuery,
    utc_now_iso,
)
from scholarlens.datasources.base import DataSource
from scholarlens.executor import execute
from scholarlens.providers.base import LlmProvider
from scholarlens.reasoner.grammar import rule_based_parse
from scholarlens.reasoner.llm import parse_query
from scholarlens.reasoner.prompts import build_reasoner_prompt
from scholarlens.synthesizer.llm import SYNTHESIZER_SYSTEM_PROMPT, synthesize
from scholarlens.synthesizer.templates import template_narrative

EmitFn = Callable[[str, dict], None]

REASONER_MODES = ("rule", "llm")
SYNTHESIZER_MODES = ("template", "llm")


@dataclass(frozen=True)
class PipelineOptions:
    reasoner_mode: str = "rule"
    synthesizer_mode: str = "template"

    def __post_init__(self) -> None:
        if self.reasoner_mode not in REASONER_MODES:
            raise ValueError(f"unknown reasoner mode {self.reasoner_mode!r}")
        if self.synthesizer_mode not in SYNTHESIZER_MODES:
            raise ValueError(f"unknown synthesizer mode {self.synthesizer_mode!r}")


def _run_reasoner(
    query: UserQuery, options: PipelineOptions, provider: Optional[LlmProvider]
) -> tuple[QueryPlan, TokenUsage]:
    if options.reasoner_mode == "llm":
        return parse_query(query, provider)
    plan = rule_based_parse(query)
    prompt = build_reasoner_prompt(query)
    usage = TokenUsage(
        input_tokens=estimate_tokens(prompt.system_prompt)
        + estimate_tokens(prompt.user_content),
        output_tokens=estimate_tokens(serialize_plan(plan)),
        estimated=True,
    )
    return plan, usage


def _run_synthesizer(
    summary: StatisticalSummary,
    options: PipelineOptions,
    provider: Optional[LlmProvider],
) -> tuple[Narrative, TokenUsage]:
    if options.synthesizer_mode == "llm":
        return synthesize(summary, provider)
    narrative = template_narrative(summary)
    usage = TokenUsage(
        input_tokens=estimate_tokens(SYNTHESIZER_SYSTEM_PROMPT)
        + estimate_tokens(serialize_canonical(summary)),
        output_tokens=estimate_tokens(narrative.text),
        estimated=True,
    )
    return narrative, usage


def run_pipeline(
    query: UserQuery,
    source: DataSource,
    provider: Optional[LlmProvider] = None,
    options: Optional[PipelineOptions] = None,
    emit: Optional[EmitFn] = None,
    run_id: Optional[str] = None,
) -> RunRecord:
    """Run the three layers for one query and return the full run record.

    Failures are recorded, not raised: a reasoner rejection, source outage,
    or provider outage yields a failed record whose failure_reason is the
    error family (plan_invalid, source_error, provider_error).
    """
    options = options or PipelineOptions()
    if "llm" in (options.reasoner_mode, options.synthesizer_mode) and provider is None:
        raise ValueError("llm mode requires a provider")

    run_id = run_id or uuid.uuid4().hex
    started_at = utc_now_iso()
    send = emit or (lambda event, payload: None)

    plan: Optional[QueryPlan] = None
    summary: Optional[StatisticalSummary] = None
    reasoner_usage = TokenUsage()
    synthesizer_usage = TokenUsage()

    def fail(exc: ScholarLensError) -> RunRecord:
        send("run_failed", {"failure_reason": exc.reason, "detail": str(exc)})
        return RunRecord(
            run_id=run_id,
            query=query,
            status="failed",
            started_at=started_at,
            finished_at=utc_now_iso(),
            ledger=RunLedger(reasoner=reasoner_usage, synthesizer=synthesizer_usage),
            plan=plan,
            summary=summary,
            narrative=None,
            failure_reason=exc.reason,
        )

    send("reasoner_started", {"query": query.text, "mode": options.reasoner_mode})
    try:
        plan, reasoner_usage = _run_reasoner(query, options, provider)
    except ScholarLensError as exc:
        return fail(exc)
    send("reasoner_completed", {"plan": plan.to_dict(), "usage": reasoner_usage.to_dict()})

    send("executor_started", {"plan": plan.to_dict(), "source": source.source_name})
    try:
        summary = execute(plan, source)
    except ScholarLensError as exc:
        return fail(exc)
    send(
        "executor_completed",
        {"summary": summary.to_dict(), "usage": TokenUsage().to_dict()},
    )

    send(
        "synthesizer_started",
        {"summary": summary.to_dict(), "mode": options.synthesizer_mode},
    )
    try:
        narrative, synthesizer_usage = _run_synthesizer(summary, options, provider)
    except ScholarLensError as exc:
        return fail(exc)
    send(
        "synthesizer_completed",
        {"narrative": narrative.to_dict(), "usage": synthesizer_usage.to_dict()},
    )

    ledger = RunLedger(
        reasoner=reasoner_usage,
        executor=TokenUsage(),
        synthesizer=synthesizer_usage,
    )
    record = RunRecord(
        run_id=run_id,
        query=query,
        status="completed",
        started_at=started_at,
        finished_at=utc_now_iso(),
        ledger=ledger,
        plan=plan,
        summary=summary,
        narrative=narrative,
    )
    send("run_completed", {"run_id": run_id, "ledger": ledger.to_dict()})
    return record
