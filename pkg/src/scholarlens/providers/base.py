"""Provider contract: one completion call in, text plus token usage out."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, runtime_checkable

from scholarlens.core.types import PromptSpec, TokenUsage

DEFAULT_LIVE_MODEL = "claude-sonnet-4-20250514"
DEFAULT_LIVE_ENDPOINT = "https://api.anthropic.com/v1/messages"
DEFAULT_API_KEY_ENV = "ANTHROPIC_API_KEY"


@dataclass(frozen=True)
class ProviderResponse:
    text: str
    usage: TokenUsage
    provider_name: str


@dataclass(frozen=True)
class ProviderConfig:
    """Where completions come from and how failures are retried.

    ``api_key_ref`` names an environment variable; the key itself is never
    stored in config files or run records.
    """

    kind: str = "mock"  # "mock" | "live"
    model_id: str = DEFAULT_LIVE_MODEL
    endpoint: str = DEFAULT_LIVE_ENDPOINT
    api_key_ref: str = DEFAULT_API_KEY_ENV
    timeout_ms: int = 60_000
    max_retries: int = 3

    def __post_init__(self) -> None:
        if self.kind not in ("mock", "live"):
            raise ValueError(f"unknown provider kind {self.kind!r}")
        if self.kind == "live" and not (
            self.model_id and self.endpoint and self.api_key_ref
        ):
            raise ValueError("live provider needs model_id, endpoint, and api_key_ref")
        if self.timeout_ms <= 0 or self.max_retries < 0:
            raise ValueError("timeout must be positive and retries non-negative")


@runtime_checkable
class LlmProvider(Protocol):
    name: str

    def complete(self, prompt: PromptSpec) -> ProviderResponse: ...
