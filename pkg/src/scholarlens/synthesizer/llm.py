"""Provider-backed narrative generation.

The prompt's user content is exactly the canonical serialization of the
summary, nothing more: the synthesizer's input cost is therefore the fixed
system prompt plus at most the summary budget, regardless of corpus size.
"""

from __future__ import annotations

from scholarlens.core.errors import ProviderError
from scholarlens.core.serialize import serialize_canonical
from scholarlens.core.types import Narrative, PromptSpec, StatisticalSummary, TokenUsage
from scholarlens.providers.base import LlmProvider
from scholarlens.synthesizer.charts import build_chart_config

SYNTHESIZER_SYSTEM_PROMPT = (
    "You write a short analytical narrative from the JSON publication "
    "statistics the user provides. Use only numbers that appear in the "
    "JSON; percentages derived from them must be labeled with %. Do not "
    "speculate about causes, cite specific papers, or invent values. "
    "Two to four sentences, plain prose."
)


def build_synthesizer_prompt(summary: StatisticalSummary) -> PromptSpec:
    return PromptSpec(
        system_prompt=SYNTHESIZER_SYSTEM_PROMPT,
        user_content=serialize_canonical(summary),
        tag="synthesizer",
    )


def synthesize(
    summary: StatisticalSummary, provider: LlmProvider
) -> tuple[Narrative, TokenUsage]:
    response = provider.complete(build_synthesizer_prompt(summary))
    text = response.text.strip()
    if not text:
        raise ProviderError("synthesizer received an empty completion")
    return Narrative(text=text, chart=build_chart_config(summary)), response.usage
