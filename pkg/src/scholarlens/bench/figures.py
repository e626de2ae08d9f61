"""Benchmark figures rendered to PNG files next to the CSV exports."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from scholarlens.bench.export import layer_means, per_query_means
from scholarlens.bench.harness import BenchmarkReport
from scholarlens.bench.invariance import InvarianceReport
from scholarlens.core.types import K_MAX


def _save(fig, path: Path) -> Path:
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_figures(
    out_dir: str | Path,
    benchmark: Optional[BenchmarkReport] = None,
    invariance: Optional[InvarianceReport] = None,
) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    if invariance and invariance.entries:
        sizes = [e["n"] for e in invariance.entries]
        res = [e["res_tokens"] for e in invariance.entries]
        naive = [e["naive_model_tokens"] for e in invariance.entries]

        fig, ax = plt.subplots(figsize=(6, 4))
        ax.plot(sizes, res, marker="o", label="pipeline tokens")
        ax.axhline(K_MAX, linestyle="--", color="gray", label="summary budget")
        ax.set_xscale("log")
        ax.set_xlabel("corpus size n")
        ax.set_ylabel("tokens per query")
        ax.set_ylim(bottom=0)
        ax.set_title("Token cost vs corpus size")
        ax.legend()
        written.append(_save(fig, out / "fig2_invariance.png"))

        fig, ax = plt.subplots(figsize=(6, 4))
        ax.plot(sizes, res, marker="o", label="pipeline")
        ax.plot(sizes, naive, marker="s", label="naive model")
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("corpus size n")
        ax.set_ylabel("tokens per query")
        ax.set_title("Scaling contrast (log-log)")
        ax.legend()
        written.append(_save(fig, out / "fig3_scaling.png"))

    if benchmark and benchmark.runs:
        res_by_query = per_query_means(benchmark)
        queries = sorted(set(res_by_query) | set(benchmark.naive_by_query))
        res_vals = [res_by_query.get(q, 0.0) for q in queries]
        naive_vals = [benchmark.naive_by_query.get(q, 0) for q in queries]

        fig, ax = plt.subplots(figsize=(10, 4))
        x = range(len(queries))
        width = 0.4
        ax.bar([i - width / 2 for i in x], res_vals, width, label="pipeline")
        ax.bar([i + width / 2 for i in x], naive_vals, width, label="naive")
        ax.set_xticks(list(x))
        ax.set_xticklabels(queries, rotation=60, ha="right", fontsize=7)
        ax.set_ylabel("tokens")
        ax.set_title("Per-query token totals")
        ax.legend()
        written.append(_save(fig, out / "fig4_per_query.png"))

        totals = [r["ledger_total"] for r in benchmark.runs if r["status"] == "completed"]
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.hist(totals, bins=20, edgecolor="black")
        ax.set_xlabel("ledger total (tokens)")
        ax.set_ylabel("runs")
        ax.set_title("Distribution of per-run token totals")
        written.append(_save(fig, out / "fig5_histogram.png"))

        means = layer_means(benchmark)
        fig, ax = plt.subplots(figsize=(6, 4))
        ax.bar(list(means.keys()), list(means.values()))
        ax.set_ylabel("mean tokens per run")
        ax.set_title("Mean token use by layer")
        written.append(_save(fig, out / "fig6_layers.png"))

    return written
