"""Ledger arithmetic and the summary statistics the benchmark reports."""

from __future__ import annotations

import math
import statistics

from scholarlens.core.types import RunLedger


def ledger_total(ledger: RunLedger) -> int:
    """Total tokens across all three layers, input plus output."""
    return ledger.reasoner.total + ledger.executor.total + ledger.synthesizer.total


def summary_stats(values: list[int]) -> dict[str, float]:
    """Arithmetic mean and sample standard deviation (n-1 divisor).

    A single value has stddev 0. Empty input is a reporting error.
    """
    if not values:
        raise ValueError("cannot summarize an empty value list")
    mean = statistics.fmean(values)
    stddev = statistics.stdev(values) if len(values) > 1 else 0.0
    if math.isnan(stddev):
        stddev = 0.0
    return {"mean": mean, "stddev": stddev}
