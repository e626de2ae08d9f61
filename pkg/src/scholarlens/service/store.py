"""Durable run and event storage: append-only JSON lines, one file per day.

An in-memory index is rebuilt by replaying the files at startup, so reads
never touch disk and the process can restart without losing history.
Appends are serialized by a lock; records are flushed line-by-line so a
crash loses at most the line being written.
"""

from __future__ import annotations

import datetime as dt
import json
import threading
from pathlib import Path
from typing import Optional

from scholarlens.service.events import LayerEvent


class _JsonlStore:
    def __init__(self, directory: str | Path, prefix: str):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)
        self._prefix = prefix
        self._lock = threading.Lock()

    def _day_file(self) -> Path:
        day = dt.datetime.now(dt.timezone.utc).strftime("%Y%m%d")
        return self.directory / f"{self._prefix}-{day}.jsonl"

    def _append_line(self, payload: dict) -> None:
        with open(self._day_file(), "a", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, ensure_ascii=False) + "\n")
            fh.flush()

    def _replay(self):
        for path in sorted(self.directory.glob(f"{self._prefix}-*.jsonl")):
            with open(path, encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        yield json.loads(line)


class RunStore(_JsonlStore):
    def __init__(self, directory: str | Path):
        super().__init__(directory, "runs")
        self._index: dict[str, dict] = {}
        self._order: list[str] = []
        for record in self._replay():
            self._remember(record)

    def _remember(self, record: dict) -> None:
        run_id = record["run_id"]
        if run_id not in self._index:
            self._order.append(run_id)
        self._index[run_id] = record

    def append(self, record: dict) -> None:
        with self._lock:
            self._append_line(record)
            self._remember(record)

    def get(self, run_id: str) -> Optional[dict]:
        with self._lock:
            return self._index.get(run_id)

    def list(self, limit: int = 20, offset: int = 0) -> list[dict]:
        with self._lock:
            newest_first = list(reversed(self._order))
            return [self._index[r] for r in newest_first[offset : offset + limit]]

    def __len__(self) -> int:
        with self._lock:
            return len(self._order)


class EventStore(_JsonlStore):
    def __init__(self, directory: str | Path):
        super().__init__(directory, "events")
        self._by_run: dict[str, list[dict]] = {}
        for event in self._replay():
            self._by_run.setdefault(event["run_id"], []).append(event)

    def append(self, event: LayerEvent) -> None:
        payload = event.to_dict()
        with self._lock:
            self._append_line(payload)
            self._by_run.setdefault(event.run_id, []).append(payload)

    def events_for(self, run_id: str) -> list[dict]:
        with self._lock:
            return list(self._by_run.get(run_id, ()))

    def has_run(self, run_id: str) -> bool:
        with self._lock:
            return run_id in self._by_run
