"""Deterministic offline provider.

Responses come from fixture entries matched against the prompt's user
content; unmatched prompts fall back to a schema-valid default chosen by
the prompt's call-site tag. Usage is computed with the shared estimator and
flagged as estimated, so offline ledgers are never mistaken for measured
ones. Byte-identical prompts always produce byte-identical responses.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Optional

from scholarlens.core.tokens import estimate_tokens
from scholarlens.core.types import PromptSpec, TokenUsage
from scholarlens.providers.base import ProviderResponse

# Safe fallbacks when no fixture matches: a minimal valid plan for reasoner
# prompts, a plain sentence for synthesizer prompts.
FALLBACK_PLAN_JSON = '{"intent":"statistics","subjects":["research"]}'
FALLBACK_NARRATIVE = (
    "The computed statistics for the requested subjects are shown above."
)


def load_fixtures(path: str | Path) -> list[dict]:
    """Load fixture entries: a JSON list of {"match": ..., "response": ...}."""
    entries = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(entries, list):
        raise ValueError("fixture file must hold a JSON list")
    for entry in entries:
        if "match" not in entry or "response" not in entry:
            raise ValueError("each fixture needs 'match' and 'response'")
    return entries


def _matches(pattern: str, content: str) -> bool:
    try:
        if re.search(pattern, content):
            return True
    except re.error:
        pass
    return pattern in content


class MockProvider:
    name = "mock"

    def __init__(self, fixtures: Optional[list[dict]] = None):
        self.fixtures = fixtures or []
        self.calls: list[PromptSpec] = []

    def complete(self, prompt: PromptSpec) -> ProviderResponse:
        self.calls.append(prompt)
        text = None
        for entry in self.fixtures:
            if _matches(entry["match"], prompt.user_content):
                text = entry["response"]
                break
        if text is None:
            text = FALLBACK_PLAN_JSON if prompt.tag == "reasoner" else FALLBACK_NARRATIVE
        usage = TokenUsage(
            input_tokens=estimate_tokens(prompt.system_prompt)
            + estimate_tokens(prompt.user_content),
            output_tokens=estimate_tokens(text),
            estimated=True,
        )
        return ProviderResponse(text=text, usage=usage, provider_name=self.name)
