"""HTTP service: pipeline runs with per-layer transparency over JSON."""

from scholarlens.service.app import create_app
from scholarlens.service.events import LayerEvent
from scholarlens.service.store import EventStore, RunStore

__all__ = ["EventStore", "LayerEvent", "RunStore", "create_app"]
