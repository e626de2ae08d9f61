"""Failure taxonomy shared by every layer.

Each error class carries a stable machine-readable ``reason`` that ends up
in RunRecord.failure_reason, HTTP error bodies, and CLI stderr.
"""

from __future__ import annotations


class ScholarLensError(Exception):
    """Base class for pipeline failures with a stable reason code."""

    reason = "error"

    def __init__(self, message: str = ""):
        super().__init__(message or self.reason)
        self.message = message or self.reason


class PlanInvalidError(ScholarLensError):
    """The question could not be turned into a valid query plan."""

    reason = "plan_invalid"


class SourceError(ScholarLensError):
    """The data source failed or returned an unusable response."""

    reason = "source_error"


class ProviderError(ScholarLensError):
    """The language-model provider failed, timed out, or is misconfigured."""

    reason = "provider_error"
