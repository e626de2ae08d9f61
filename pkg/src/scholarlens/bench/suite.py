"""Benchmark query suite: a frozen set of 20 questions, five per intent."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from scholarlens.core.types import Intent

QUERIES_PER_INTENT = 5


@dataclass(frozen=True)
class SuiteEntry:
    id: str
    intent: str
    text: str

    def __post_init__(self) -> None:
        Intent(self.intent)  # closed set
        if not self.id or not self.text:
            raise ValueError("suite entries need an id and text")


def _validate(entries: list[SuiteEntry]) -> list[SuiteEntry]:
    by_intent: dict[str, int] = {}
    for entry in entries:
        by_intent[entry.intent] = by_intent.get(entry.intent, 0) + 1
    expected = {intent.value: QUERIES_PER_INTENT for intent in Intent}
    if by_intent != expected:
        raise ValueError(
            f"suite must hold {QUERIES_PER_INTENT} queries per intent, got {by_intent}"
        )
    if len({e.id for e in entries}) != len(entries):
        raise ValueError("suite entry ids must be unique")
    return entries


def load_suite(path: str | Path) -> list[SuiteEntry]:
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    return _validate([SuiteEntry(**entry) for entry in raw])


def default_suite() -> list[SuiteEntry]:
    raw = json.loads(
        resources.files("scholarlens.bench")
        .joinpath("data/default_suite.json")
        .read_text(encoding="utf-8")
    )
    return _validate([SuiteEntry(**entry) for entry in raw])
