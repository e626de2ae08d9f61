"""HTTP API surface: lifecycle, persistence, streaming, validation."""

import json
import time

import pytest
from fastapi.testclient import TestClient

from scholarlens.service.app import create_app

QUESTION = "How has graphene research evolved from 2015 to 2020?"


@pytest.fixture()
def client(tmp_path):
    app = create_app(store_dir=str(tmp_path))
    with TestClient(app) as c:
        yield c


def submit(client, question=QUESTION, **overrides):
    payload = {"question": question, "source": "local", "provider": "mock", "n": 500}
    payload.update(overrides)
    resp = client.post("/api/query", json=payload)
    assert resp.status_code == 202, resp.text
    return resp.json()["run_id"]


def wait_for_run(client, run_id, timeout=10.0):
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        record = client.get(f"/api/runs/{run_id}").json()
        if record.get("status") in ("completed", "failed"):
            return record
        time.sleep(0.02)
    raise AssertionError(f"run {run_id} did not finish")


def sse_events(text):
    events = []
    for block in text.split("\n\n"):
        block = block.strip()
        if block.startswith("data: "):
            events.append(json.loads(block[len("data: "):]))
    return events


class TestBasics:
    def test_health(self, client):
        resp = client.get("/api/health")
        assert resp.status_code == 200
        assert resp.json() == {"status": "ok"}

    def test_query_completes_and_persists(self, client):
        run_id = submit(client)
        record = wait_for_run(client, run_id)
        assert record["status"] == "completed"
        assert record["narrative"]["text"]
        assert record["ledger"]["executor"]["input_tokens"] == 0

    def test_runs_listing(self, client):
        run_id = submit(client)
        wait_for_run(client, run_id)
        listing = client.get("/api/runs").json()
        assert listing["total"] >= 1
        row = next(r for r in listing["runs"] if r["run_id"] == run_id)
        assert set(row) == {
            "run_id", "status", "query", "started_at", "finished_at", "ledger_total",
        }
        assert row["ledger_total"] > 0

    def test_unknown_run_is_404(self, client):
        assert client.get("/api/runs/nope").status_code == 404
        assert client.get("/api/runs/nope/events").status_code == 404

    def test_failed_parse_is_a_failed_run_not_an_http_error(self, client):
        run_id = submit(client, question="???")
        record = wait_for_run(client, run_id)
        assert record["status"] == "failed"
        assert record["failure_reason"] == "plan_invalid"


class TestValidation:
    def test_empty_question_rejected(self, client):
        resp = client.post(
            "/api/query",
            json={"question": "   ", "source": "local", "provider": "mock"},
        )
        assert resp.status_code == 400

    def test_unknown_source_rejected(self, client):
        resp = client.post(
            "/api/query",
            json={"question": QUESTION, "source": "scopus", "provider": "mock"},
        )
        assert resp.status_code == 400

    def test_unknown_provider_rejected(self, client):
        resp = client.post(
            "/api/query",
            json={"question": QUESTION, "source": "local", "provider": "gpt"},
        )
        assert resp.status_code == 400

    def test_live_provider_without_key_rejected(self, client, monkeypatch):
        monkeypatch.delenv("ANTHROPIC_API_KEY", raising=False)
        resp = client.post(
            "/api/query",
            json={"question": QUESTION, "source": "local", "provider": "live"},
        )
        assert resp.status_code == 400


class TestEventStream:
    def test_stream_replays_full_lifecycle(self, client):
        run_id = submit(client)
        wait_for_run(client, run_id)
        resp = client.get(f"/api/runs/{run_id}/events")
        assert resp.status_code == 200
        assert resp.headers["content-type"].startswith("text/event-stream")
        events = sse_events(resp.text)
        assert [e["event"] for e in events] == [
            "reasoner_started",
            "reasoner_completed",
            "executor_started",
            "executor_completed",
            "synthesizer_started",
            "synthesizer_completed",
            "run_completed",
        ]

    def test_failed_run_stream_ends_with_run_failed(self, client):
        run_id = submit(client, question="???")
        wait_for_run(client, run_id)
        events = sse_events(client.get(f"/api/runs/{run_id}/events").text)
        assert events[-1]["event"] == "run_failed"
        assert events[-1]["payload"]["failure_reason"] == "plan_invalid"

    def test_stream_payloads_expose_layer_boundaries(self, client):
        run_id = submit(client)
        wait_for_run(client, run_id)
        events = sse_events(client.get(f"/api/runs/{run_id}/events").text)
        by_name = {e["event"]: e["payload"] for e in events}
        assert by_name["executor_completed"]["usage"]["input_tokens"] == 0
        assert "summary" in by_name["synthesizer_started"]


class TestPersistence:
    def test_history_survives_restart(self, tmp_path):
        app = create_app(store_dir=str(tmp_path))
        with TestClient(app) as c:
            run_id = submit(c)
            wait_for_run(c, run_id)

        with TestClient(create_app(store_dir=str(tmp_path))) as c2:
            record = c2.get(f"/api/runs/{run_id}")
            assert record.status_code == 200
            assert record.json()["status"] == "completed"
            events = sse_events(c2.get(f"/api/runs/{run_id}/events").text)
            assert events[-1]["event"] == "run_completed"


class TestBench:
    def test_bench_endpoint_runs_to_completion(self, client, tmp_path):
        resp = client.post(
            "/api/bench", json={"runs_per_query": 1, "mode": "mock"}
        )
        assert resp.status_code == 202
        bench_id = resp.json()["bench_id"]
        deadline = time.monotonic() + 60
        while time.monotonic() < deadline:
            status = client.get(f"/api/bench/{bench_id}").json()
            if status["status"] in ("completed", "failed"):
                break
            time.sleep(0.1)
        assert status["status"] == "completed"
        report = status["report"]
        assert report["failed_count"] == 0
        assert len(report["runs"]) == 20
        assert report["flags"] == []

    def test_unknown_bench_is_404(self, client):
        assert client.get("/api/bench/nope").status_code == 404

    def test_missing_suite_file_rejected(self, client):
        resp = client.post("/api/bench", json={"suite": "/nonexistent/suite.json"})
        assert resp.status_code == 400


class TestStaticConsole:
    def test_console_served_when_ui_dir_set(self, tmp_path, monkeypatch):
        ui = tmp_path / "ui"
        ui.mkdir()
        (ui / "index.html").write_text("<!doctype html><title>console</title>")
        monkeypatch.setenv("SCHOLARLENS_UI_DIR", str(ui))
        with TestClient(create_app(store_dir=tmp_path / "store")) as c:
            page = c.get("/")
            assert page.status_code == 200
            assert "console" in page.text
            # API routes keep priority over the static mount
            assert c.get("/api/health").json() == {"status": "ok"}

    def test_no_mount_without_ui_dir(self, tmp_path, monkeypatch):
        monkeypatch.delenv("SCHOLARLENS_UI_DIR", raising=False)
        with TestClient(create_app(store_dir=tmp_path / "store")) as c:
            assert c.get("/").status_code == 404
