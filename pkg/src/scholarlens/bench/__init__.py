"""Benchmark harness: baseline cost model, suite runner, invariance check."""

from scholarlens.bench.cost_model import (
    DEFAULT_NAIVE_MODEL,
    NaiveCostModel,
    compute_savings,
    naive_cost,
)
from scholarlens.bench.export import export_figure_data
from scholarlens.bench.figures import render_figures
from scholarlens.bench.harness import BenchmarkReport, run_benchmark, run_naive_baseline
from scholarlens.bench.invariance import (
    INVARIANCE_QUERY_TEXT,
    InvarianceReport,
    verify_invariance,
)
from scholarlens.bench.suite import SuiteEntry, default_suite, load_suite

__all__ = [
    "BenchmarkReport",
    "DEFAULT_NAIVE_MODEL",
    "INVARIANCE_QUERY_TEXT",
    "InvarianceReport",
    "NaiveCostModel",
    "SuiteEntry",
    "compute_savings",
    "default_suite",
    "export_figure_data",
    "load_suite",
    "naive_cost",
    "render_figures",
    "run_benchmark",
    "run_naive_baseline",
    "verify_invariance",
]
