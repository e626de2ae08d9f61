"""Live HTTP completion adapter (messages-style JSON API).

Request shape: POST {endpoint} with {"model", "max_tokens", "system",
"messages":[{"role":"user","content":...}]} and the API key from the
configured environment variable in the x-api-key header. The response's
content[0].text and usage.{input,output}_tokens are used; usage is
provider-reported, not estimated.
"""

from __future__ import annotations

import os
import threading
import time

import requests

from scholarlens.core.errors import ProviderError
from scholarlens.core.types import PromptSpec, TokenUsage
from scholarlens.providers.base import ProviderConfig, ProviderResponse

BACKOFF_INITIAL_S = 0.5
BACKOFF_FACTOR = 2.0
MAX_OUTPUT_TOKENS = 1024
MAX_IN_FLIGHT = 4
RETRYABLE_STATUSES = (408, 429, 500, 502, 503, 504, 529)


class LiveProvider:
    name = "live"

    def __init__(self, config: ProviderConfig, max_in_flight: int = MAX_IN_FLIGHT):
        if config.kind != "live":
            raise ValueError("LiveProvider requires a live ProviderConfig")
        self.config = config
        self._slots = threading.Semaphore(max_in_flight)

    def _api_key(self) -> str:
        key = os.environ.get(self.config.api_key_ref, "")
        if not key:
            raise ProviderError(
                f"environment variable {self.config.api_key_ref} is not set"
            )
        return key

    def complete(self, prompt: PromptSpec) -> ProviderResponse:
        payload = {
            "model": self.config.model_id,
            "max_tokens": MAX_OUTPUT_TOKENS,
            "system": prompt.system_prompt,
            "messages": [{"role": "user", "content": prompt.user_content}],
        }
        headers = {
            "x-api-key": self._api_key(),
            "anthropic-version": "2023-06-01",
            "content-type": "application/json",
        }
        timeout_s = self.config.timeout_ms / 1000.0
        delay = BACKOFF_INITIAL_S
        last_error = "no attempt made"
        for attempt in range(self.config.max_retries + 1):
            try:
                with self._slots:
                    resp = requests.post(
                        self.config.endpoint,
                        json=payload,
                        headers=headers,
                        timeout=timeout_s,
                    )
            except requests.RequestException as exc:
                last_error = f"request failed: {exc}"
            else:
                if resp.status_code == 200:
                    return self._parse(resp.json())
                last_error = f"HTTP {resp.status_code}: {resp.text[:200]}"
                if resp.status_code not in RETRYABLE_STATUSES:
                    raise ProviderError(last_error)
            if attempt < self.config.max_retries:
                time.sleep(delay)
                delay *= BACKOFF_FACTOR
        raise ProviderError(f"{last_error} (after {self.config.max_retries} retries)")

    def _parse(self, body: dict) -> ProviderResponse:
        try:
            text = "".join(
                block.get("text", "")
                for block in body["content"]
                if block.get("type") == "text"
            )
            usage = TokenUsage(
                input_tokens=int(body["usage"]["input_tokens"]),
                output_tokens=int(body["usage"]["output_tokens"]),
                estimated=False,
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ProviderError(f"malformed completion response: {exc}") from exc
        if not text:
            raise ProviderError("completion response contained no text")
        return ProviderResponse(text=text, usage=usage, provider_name=self.name)
