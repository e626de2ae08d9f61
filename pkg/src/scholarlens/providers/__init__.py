"""Language-model completion providers with token accounting."""

from scholarlens.providers.base import LlmProvider, ProviderConfig, ProviderResponse
from scholarlens.providers.live import LiveProvider
from scholarlens.providers.mock import MockProvider, load_fixtures

__all__ = [
    "LiveProvider",
    "LlmProvider",
    "MockProvider",
    "ProviderConfig",
    "ProviderResponse",
    "load_fixtures",
]
