"""Run lifecycle events.

Observers see each layer's inputs and outputs as they happen. Events for a
run always arrive as a prefix of the fixed lifecycle order, ending in
exactly one terminal event.
"""

from __future__ import annotations

from dataclasses import dataclass

from scholarlens.core.types import utc_now_iso

LIFECYCLE_ORDER = (
    "reasoner_started",
    "reasoner_completed",
    "executor_started",
    "executor_completed",
    "synthesizer_started",
    "synthesizer_completed",
    "run_completed",
)
TERMINAL_EVENTS = ("run_completed", "run_failed")
EVENT_NAMES = LIFECYCLE_ORDER + ("run_failed",)


@dataclass(frozen=True)
class LayerEvent:
    run_id: str
    event: str
    payload: dict
    at: str  # ISO-8601 UTC

    def __post_init__(self) -> None:
        if self.event not in EVENT_NAMES:
            raise ValueError(f"unknown event {self.event!r}")

    def to_dict(self) -> dict:
        return {
            "run_id": self.run_id,
            "event": self.event,
            "payload": self.payload,
            "at": self.at,
        }


def make_event(run_id: str, event: str, payload: dict) -> LayerEvent:
    return LayerEvent(run_id=run_id, event=event, payload=payload, at=utc_now_iso())
