"""Provider-backed plan extraction with a single repair retry."""

from __future__ import annotations

from scholarlens.core.errors import PlanInvalidError
from scholarlens.core.types import PromptSpec, QueryPlan, TokenUsage, UserQuery
from scholarlens.providers.base import LlmProvider
from scholarlens.reasoner.plan_json import validate_plan_json
from scholarlens.reasoner.prompts import build_reasoner_prompt


def _extract_json(text: str) -> str:
    """Cut the outermost {...} span; models sometimes wrap JSON in prose."""
    start, end = text.find("{"), text.rfind("}")
    if start != -1 and end > start:
        return text[start : end + 1]
    return text


def parse_query(query: UserQuery, provider: LlmProvider) -> tuple[QueryPlan, TokenUsage]:
    prompt = build_reasoner_prompt(query)
    response = provider.complete(prompt)
    usage = response.usage
    try:
        return validate_plan_json(_extract_json(response.text)), usage
    except PlanInvalidError as first_error:
        retry_prompt = PromptSpec(
            system_prompt=prompt.system_prompt,
            user_content=(
                f"{prompt.user_content}\n\nYour previous reply was rejected: "
                f"{first_error}. Reply again with one corrected JSON object only."
            ),
            tag="reasoner",
        )
        retry = provider.complete(retry_prompt)
        usage = TokenUsage(
            input_tokens=usage.input_tokens + retry.usage.input_tokens,
            output_tokens=usage.output_tokens + retry.usage.output_tokens,
            estimated=usage.estimated or retry.usage.estimated,
        )
        return validate_plan_json(_extract_json(retry.text)), usage
