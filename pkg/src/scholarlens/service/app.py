"""HTTP API over the pipeline.

Endpoints: POST /api/query (accepts a question, returns a run id at once),
GET /api/runs (newest first), GET /api/runs/{id}, GET /api/runs/{id}/events
(server-sent events with full replay), POST /api/bench, GET /api/bench/{id},
GET /api/health.

Runs execute on worker threads; every lifecycle event and finished record
is persisted before the terminal event is visible, so reconnecting clients
can always replay a complete prefix. No response body ever carries
record-level bibliographic content, because no such field exists anywhere
upstream.

Set SCHOLARLENS_UI_DIR to a built frontend directory to have the service
serve the console at / alongside the API.
"""

from __future__ import annotations

import asyncio
import json
import os
import uuid
from concurrent.futures import ThreadPoolExecutor
from contextlib import asynccontextmanager
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse, StreamingResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from scholarlens.bench.export import export_figure_data
from scholarlens.bench.figures import render_figures
from scholarlens.bench.harness import run_benchmark
from scholarlens.bench.suite import default_suite, load_suite
from scholarlens.core.pipeline import PipelineOptions, run_pipeline
from scholarlens.core.types import UserQuery
from scholarlens.datasources.crossref import CrossrefSource
from scholarlens.datasources.synthetic import cached_synthetic_source
from scholarlens.providers.base import ProviderConfig
from scholarlens.providers.live import LiveProvider
from scholarlens.providers.mock import MockProvider
from scholarlens.service.events import TERMINAL_EVENTS, make_event
from scholarlens.service.store import EventStore, RunStore

DEFAULT_SEED = 42
DEFAULT_LOCAL_SIZE = 10_000
EVENT_POLL_SECONDS = 0.05

SOURCES = ("local", "crossref")
PROVIDERS = ("mock", "live")


class QueryRequest(BaseModel):
    question: str
    source: str = "local"
    provider: str = "mock"
    seed: Optional[int] = None
    n: Optional[int] = None


class BenchRequest(BaseModel):
    suite: Optional[str] = None
    runs_per_query: int = 5
    mode: str = "mock"


def _env(name: str, default: str) -> str:
    return os.environ.get(name, default)


def create_app(
    store_dir: Optional[str | Path] = None,
    mailto: Optional[str] = None,
    model_id: Optional[str] = None,
    api_key_env: Optional[str] = None,
) -> FastAPI:
    store_dir = Path(store_dir or _env("SCHOLARLENS_STORE_DIR", "./scholarlens_data"))
    mailto = mailto or _env("SCHOLARLENS_MAILTO", "scholarlens@example.org")
    model_id = model_id or _env("SCHOLARLENS_MODEL_ID", ProviderConfig().model_id)
    api_key_env = api_key_env or _env("SCHOLARLENS_API_KEY_ENV", "ANTHROPIC_API_KEY")

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        yield
        app.state.workers.shutdown(wait=True)

    app = FastAPI(title="scholarlens", lifespan=lifespan)
    app.state.runs = RunStore(store_dir)
    app.state.events = EventStore(store_dir)
    app.state.workers = ThreadPoolExecutor(max_workers=4)
    app.state.pending: dict[str, dict] = {}
    app.state.benches: dict[str, dict] = {}
    app.state.store_dir = store_dir
    app.state.mailto = mailto
    app.state.model_id = model_id
    app.state.api_key_env = api_key_env

    def build_source(req: QueryRequest):
        if req.source == "local":
            seed = DEFAULT_SEED if req.seed is None else req.seed
            n = DEFAULT_LOCAL_SIZE if req.n is None else req.n
            return cached_synthetic_source(seed, n)
        return CrossrefSource(mailto=mailto)

    def build_provider_options(kind: str):
        if kind == "mock":
            return None, PipelineOptions(reasoner_mode="rule", synthesizer_mode="template")
        config = ProviderConfig(kind="live", model_id=model_id, api_key_ref=api_key_env)
        return LiveProvider(config), PipelineOptions(
            reasoner_mode="llm", synthesizer_mode="llm"
        )

    def execute_run(run_id: str, query: UserQuery, req: QueryRequest) -> None:
        def emit(event: str, payload: dict) -> None:
            app.state.events.append(make_event(run_id, event, payload))

        try:
            source = build_source(req)
            provider, options = build_provider_options(req.provider)
            record = run_pipeline(
                query, source, provider=provider, options=options,
                emit=emit, run_id=run_id,
            )
            app.state.runs.append(record.to_dict())
        except Exception as exc:  # worker thread: nothing above us to catch it
            emit("run_failed", {"failure_reason": "error", "detail": str(exc)})
            app.state.runs.append(
                {
                    "run_id": run_id,
                    "query": {"text": query.text},
                    "status": "failed",
                    "failure_reason": "error",
                }
            )
        finally:
            app.state.pending.pop(run_id, None)

    @app.get("/api/health")
    async def health() -> dict:
        return {"status": "ok"}

    @app.post("/api/query", status_code=202)
    async def submit_query(req: QueryRequest) -> dict:
        if req.source not in SOURCES:
            raise HTTPException(400, f"unknown source {req.source!r}")
        if req.provider not in PROVIDERS:
            raise HTTPException(400, f"unknown provider {req.provider!r}")
        if req.provider == "live" and not os.environ.get(api_key_env):
            raise HTTPException(400, f"live provider needs {api_key_env} set")
        try:
            query = UserQuery(req.question)
        except ValueError as exc:
            raise HTTPException(400, str(exc)) from exc

        run_id = uuid.uuid4().hex
        app.state.pending[run_id] = {
            "run_id": run_id,
            "status": "running",
            "query": {"text": query.text},
        }
        app.state.workers.submit(execute_run, run_id, query, req)
        return {"run_id": run_id}

    @app.get("/api/runs")
    async def list_runs(limit: int = 20, offset: int = 0) -> dict:
        rows = [
            {
                "run_id": r["run_id"],
                "status": r["status"],
                "query": r["query"]["text"],
                "started_at": r.get("started_at"),
                "finished_at": r.get("finished_at"),
                "ledger_total": r.get("ledger_total"),
            }
            for r in app.state.runs.list(limit=limit, offset=offset)
        ]
        return {"runs": rows, "total": len(app.state.runs)}

    @app.get("/api/runs/{run_id}")
    async def get_run(run_id: str) -> JSONResponse:
        record = app.state.runs.get(run_id) or app.state.pending.get(run_id)
        if record is None:
            raise HTTPException(404, "unknown run id")
        return JSONResponse(record)

    @app.get("/api/runs/{run_id}/events")
    async def stream_events(run_id: str, request: Request) -> StreamingResponse:
        known = (
            app.state.events.has_run(run_id)
            or run_id in app.state.pending
            or app.state.runs.get(run_id) is not None
        )
        if not known:
            raise HTTPException(404, "unknown run id")

        async def generate():
            sent = 0
            while True:
                events = app.state.events.events_for(run_id)
                while sent < len(events):
                    event = events[sent]
                    sent += 1
                    yield f"data: {json.dumps(event, ensure_ascii=False)}\n\n"
                    if event["event"] in TERMINAL_EVENTS:
                        return
                if await request.is_disconnected():
                    return
                # a finished run with no terminal event means a dead stream
                if run_id not in app.state.pending and sent >= len(
                    app.state.events.events_for(run_id)
                ):
                    record = app.state.runs.get(run_id)
                    if record is not None:
                        return
                await asyncio.sleep(EVENT_POLL_SECONDS)

        return StreamingResponse(generate(), media_type="text/event-stream")

    def execute_bench(bench_id: str, req: BenchRequest) -> None:
        try:
            suite = load_suite(req.suite) if req.suite else default_suite()
            source = cached_synthetic_source(DEFAULT_SEED, DEFAULT_LOCAL_SIZE)
            if req.mode == "live":
                config = ProviderConfig(
                    kind="live", model_id=model_id, api_key_ref=api_key_env
                )
                provider = LiveProvider(config)
            else:
                provider = MockProvider()
            report = run_benchmark(suite, req.runs_per_query, source, provider)
            out_dir = Path(store_dir) / f"bench-{bench_id}"
            export_figure_data(out_dir, benchmark=report)
            render_figures(out_dir, benchmark=report)
            app.state.benches[bench_id] = {
                "status": "completed",
                "report": report.to_dict(),
                "artifacts_dir": str(out_dir),
            }
        except Exception as exc:
            app.state.benches[bench_id] = {"status": "failed", "detail": str(exc)}

    @app.post("/api/bench", status_code=202)
    async def submit_bench(req: BenchRequest) -> dict:
        if req.mode not in PROVIDERS:
            raise HTTPException(400, f"unknown mode {req.mode!r}")
        if req.mode == "live" and not os.environ.get(api_key_env):
            raise HTTPException(400, f"live mode needs {api_key_env} set")
        if req.runs_per_query < 1:
            raise HTTPException(400, "runs_per_query must be >= 1")
        if req.suite and not Path(req.suite).is_file():
            raise HTTPException(400, f"suite file not found: {req.suite}")
        bench_id = uuid.uuid4().hex
        app.state.benches[bench_id] = {"status": "running"}
        app.state.workers.submit(execute_bench, bench_id, req)
        return {"bench_id": bench_id}

    @app.get("/api/bench/{bench_id}")
    async def get_bench(bench_id: str) -> dict:
        status = app.state.benches.get(bench_id)
        if status is None:
            raise HTTPException(404, "unknown bench id")
        return status

    # mounted last so /api/* keeps priority over static paths
    ui_dir = os.environ.get("SCHOLARLENS_UI_DIR", "")
    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
