"""Command-line front end.

Four subcommands: `ask` answers a single question, `bench` runs the query
suite and writes the report with figure data and rendered charts, `verify`
checks that per-query token cost stays flat while the corpus grows, and
`serve` starts the HTTP service.

Exit codes: 0 success, 1 verification or benchmark assertion failure,
2 usage or configuration error.
"""

from __future__ import annotations

import json
import os
import socket
import sys
from pathlib import Path
from typing import Optional

import click

from scholarlens.bench.export import export_figure_data
from scholarlens.bench.figures import render_figures
from scholarlens.bench.harness import run_benchmark
from scholarlens.bench.invariance import FLATNESS_LIMIT, verify_invariance
from scholarlens.bench.suite import default_suite, load_suite
from scholarlens.core.ledger import ledger_total
from scholarlens.core.pipeline import PipelineOptions, run_pipeline
from scholarlens.core.serialize import serialize_canonical
from scholarlens.core.types import UserQuery
from scholarlens.datasources.crossref import CrossrefSource
from scholarlens.datasources.synthetic import cached_synthetic_source
from scholarlens.providers.base import ProviderConfig
from scholarlens.providers.live import LiveProvider
from scholarlens.providers.mock import MockProvider

DEFAULT_SEED = 42
DEFAULT_LOCAL_SIZE = 10_000
DEFAULT_VERIFY_SIZES = "100,1000,10000,100000,1000000"


def _mailto() -> str:
    return os.environ.get("SCHOLARLENS_MAILTO", "scholarlens@example.org")


def _api_key_env() -> str:
    return os.environ.get("SCHOLARLENS_API_KEY_ENV", "ANTHROPIC_API_KEY")


def _live_provider() -> LiveProvider:
    key_env = _api_key_env()
    if not os.environ.get(key_env):
        raise click.UsageError(f"live mode needs the {key_env} environment variable set")
    config = ProviderConfig(
        kind="live",
        model_id=os.environ.get("SCHOLARLENS_MODEL_ID", ProviderConfig().model_id),
        api_key_ref=key_env,
    )
    return LiveProvider(config)


@click.group()
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="JSON file of settings applied as environment-variable defaults.",
)
def main(config: Optional[str]) -> None:
    """Analytics over scholarly metadata at constant LLM token cost."""
    if config:
        try:
            settings = json.loads(Path(config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise click.UsageError(f"cannot read config file: {exc}") from exc
        if not isinstance(settings, dict):
            raise click.UsageError("config file must hold a JSON object")
        for key, value in settings.items():
            os.environ.setdefault(str(key), str(value))


@main.command()
@click.argument("question")
@click.option("--source", type=click.Choice(["local", "crossref"]), default="local",
              show_default=True, help="Where aggregate counts come from.")
@click.option("--provider", type=click.Choice(["mock", "live"]), default="mock",
              show_default=True,
              help="mock = offline rule parser + template narrative; live = real model.")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True,
              help="Seed for the local corpus.")
@click.option("--n", type=int, default=DEFAULT_LOCAL_SIZE, show_default=True,
              help="Local corpus size in records.")
@click.option("--show-layers", is_flag=True,
              help="Print the plan, the summary, and the token ledger too.")
@click.option("--json", "as_json", is_flag=True,
              help="Print the full run record as JSON instead of text.")
def ask(question: str, source: str, provider: str, seed: int, n: int,
        show_layers: bool, as_json: bool) -> None:
    """Answer one QUESTION and print the narrative."""
    try:
        query = UserQuery(question)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc

    if source == "local":
        if n < 1:
            raise click.UsageError("--n must be at least 1")
        data_source = cached_synthetic_source(seed, n)
    else:
        data_source = CrossrefSource(mailto=_mailto())

    if provider == "mock":
        llm = None
        options = PipelineOptions(reasoner_mode="rule", synthesizer_mode="template")
    else:
        llm = _live_provider()
        options = PipelineOptions(reasoner_mode="llm", synthesizer_mode="llm")

    record = run_pipeline(query, data_source, provider=llm, options=options)

    if record.status != "completed":
        click.echo(f"run failed: {record.failure_reason}", err=True)
        sys.exit(1)

    if as_json:
        click.echo(json.dumps(record.to_dict(), ensure_ascii=False, indent=2))
        return

    if show_layers:
        click.echo("plan:")
        click.echo(json.dumps(record.plan.to_dict(), ensure_ascii=False, indent=2))
        click.echo("summary:")
        click.echo(serialize_canonical(record.summary))
        click.echo("ledger:")
        for layer in ("reasoner", "executor", "synthesizer"):
            usage = getattr(record.ledger, layer)
            click.echo(f"  {layer}: input={usage.input_tokens} output={usage.output_tokens}")
        click.echo(f"  total: {ledger_total(record.ledger)}")
        click.echo("narrative:")
    click.echo(record.narrative.text)


@main.command()
@click.option("--suite", type=str, default=None,
              help="Path to a suite JSON file; omit for the built-in 20-query suite.")
@click.option("--runs", type=int, default=5, show_default=True,
              help="Repetitions per query.")
@click.option("--mode", type=click.Choice(["mock", "live"]), default="mock",
              show_default=True)
@click.option("--out", type=click.Path(file_okay=False), default="bench_out",
              show_default=True, help="Directory for the report, CSVs, and charts.")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--n", type=int, default=DEFAULT_LOCAL_SIZE, show_default=True)
def bench(suite: Optional[str], runs: int, mode: str, out: str, seed: int, n: int) -> None:
    """Run the benchmark suite and write report.json, figure CSVs, and charts."""
    if runs < 1:
        raise click.UsageError("--runs must be at least 1")
    if suite is not None and not Path(suite).is_file():
        raise click.UsageError(f"suite file not found: {suite}")
    entries = load_suite(suite) if suite else default_suite()

    provider = _live_provider() if mode == "live" else MockProvider()
    source = cached_synthetic_source(seed, n)
    report = run_benchmark(entries, runs, source, provider)

    out_dir = Path(out)
    out_dir.mkdir(parents=True, exist_ok=True)
    report_path = out_dir / "report.json"
    report_path.write_text(
        json.dumps(report.to_dict(), ensure_ascii=False, indent=2) + "\n",
        encoding="utf-8",
    )
    export_figure_data(out_dir, benchmark=report)
    render_figures(out_dir, benchmark=report)

    click.echo(f"runs: {len(report.runs)} ({report.failed_count} failed)")
    click.echo(f"tokens per query: {report.res_mean:.1f} ± {report.res_stddev:.1f}")
    click.echo(f"naive baseline mean: {report.naive_mean:.1f}")
    click.echo(f"savings: {report.savings_fraction:.1%}")
    click.echo(f"report written to {report_path}")
    if report.flags:
        for flag in report.flags:
            click.echo(f"flag: {flag}", err=True)
        sys.exit(1)


@main.command()
@click.option("--sizes", default=DEFAULT_VERIFY_SIZES, show_default=True,
              help="Comma-separated corpus sizes, ascending.")
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--out", type=click.Path(file_okay=False), default=None,
              help="Optional directory for invariance figure CSVs and charts.")
def verify(sizes: str, seed: int, out: Optional[str]) -> None:
    """Check that per-query token cost stays flat as the corpus grows."""
    try:
        size_list = [int(part) for part in sizes.split(",") if part.strip()]
    except ValueError as exc:
        raise click.UsageError(f"bad --sizes value: {exc}") from exc
    if not size_list:
        raise click.UsageError("--sizes must name at least one size")

    try:
        report = verify_invariance(size_list, seed=seed)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc

    header = f"{'n':>9}  {'res_tokens':>10}  {'naive_model_tokens':>18}  {'executor_requests':>17}"
    click.echo(header)
    for entry in report.entries:
        click.echo(
            f"{entry['n']:>9}  {entry['res_tokens']:>10}  "
            f"{entry['naive_model_tokens']:>18.0f}  {entry['executor_requests']:>17}"
        )
    click.echo(f"flatness_ratio: {report.flatness_ratio:.4f} (limit {FLATNESS_LIMIT})")

    if out:
        out_dir = Path(out)
        out_dir.mkdir(parents=True, exist_ok=True)
        export_figure_data(out_dir, invariance=report)
        render_figures(out_dir, invariance=report)
        click.echo(f"figure data written to {out_dir}")

    if report.flatness_ratio > FLATNESS_LIMIT:
        click.echo("FAIL: token cost grew with corpus size", err=True)
        sys.exit(1)
    click.echo("PASS: token cost is flat across corpus sizes")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=click.IntRange(1, 65535), default=8765, show_default=True)
@click.option("--store-dir", type=click.Path(file_okay=False), default=None,
              help="Run and event persistence directory.")
def serve(host: str, port: int, store_dir: Optional[str]) -> None:
    """Start the HTTP service (blocks until interrupted)."""
    import uvicorn

    from scholarlens.service.app import create_app

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((host, port))
    except OSError as exc:
        raise click.UsageError(f"cannot bind {host}:{port}: {exc}") from exc
    finally:
        probe.close()

    app = create_app(store_dir=store_dir)
    uvicorn.run(app, host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
