"""Figure-data CSV export.

Five delimited files, one per figure of the evaluation: the constant-cost
line, the log-log scaling contrast, per-query RES vs naive totals, the
ledger-total histogram, and the per-layer mean split.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Optional

from scholarlens.bench.harness import BenchmarkReport
from scholarlens.bench.invariance import InvarianceReport

FIGURE_FILES = (
    "fig2_invariance.csv",
    "fig3_scaling.csv",
    "fig4_per_query.csv",
    "fig5_histogram.csv",
    "fig6_layers.csv",
)

LAYERS = ("reasoner", "executor", "synthesizer")


def _write(path: Path, header: list[str], rows: list[list]) -> Path:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    return path


def per_query_means(report: BenchmarkReport) -> dict[str, float]:
    """Mean ledger total per query id over its completed runs."""
    sums: dict[str, list[int]] = {}
    for run in report.runs:
        if run["status"] == "completed":
            sums.setdefault(run["query"], []).append(run["ledger_total"])
    return {q: sum(v) / len(v) for q, v in sorted(sums.items())}


def layer_means(report: BenchmarkReport) -> dict[str, float]:
    completed = [r for r in report.runs if r["status"] == "completed"]
    if not completed:
        return {layer: 0.0 for layer in LAYERS}
    return {
        layer: sum(r[f"{layer}_tokens"] for r in completed) / len(completed)
        for layer in LAYERS
    }


def export_figure_data(
    out_dir: str | Path,
    benchmark: Optional[BenchmarkReport] = None,
    invariance: Optional[InvarianceReport] = None,
) -> list[Path]:
    """Write all five CSVs; absent reports yield headers-only files."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    entries = invariance.entries if invariance else []
    written.append(
        _write(
            out / "fig2_invariance.csv",
            ["n", "res_tokens", "stddev"],
            # deterministic offline backends: repeat runs are identical
            [[e["n"], e["res_tokens"], 0.0] for e in entries],
        )
    )
    written.append(
        _write(
            out / "fig3_scaling.csv",
            ["n", "res_tokens", "naive_model_tokens"],
            [[e["n"], e["res_tokens"], e["naive_model_tokens"]] for e in entries],
        )
    )

    res_by_query = per_query_means(benchmark) if benchmark else {}
    naive_by_query = benchmark.naive_by_query if benchmark else {}
    written.append(
        _write(
            out / "fig4_per_query.csv",
            ["query", "res", "naive"],
            [
                [q, res_by_query.get(q, ""), naive_by_query.get(q, "")]
                for q in sorted(set(res_by_query) | set(naive_by_query))
            ],
        )
    )
    totals = (
        [r["ledger_total"] for r in benchmark.runs if r["status"] == "completed"]
        if benchmark
        else []
    )
    written.append(
        _write(out / "fig5_histogram.csv", ["ledger_total"], [[t] for t in totals])
    )
    means = layer_means(benchmark) if benchmark else {layer: 0.0 for layer in LAYERS}
    written.append(
        _write(
            out / "fig6_layers.csv",
            ["layer", "mean_tokens"],
            [[layer, means[layer]] for layer in LAYERS] if benchmark else [],
        )
    )
    return written
