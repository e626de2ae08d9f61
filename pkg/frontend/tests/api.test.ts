import { describe, expect, it } from "vitest";
import { ApiError, ServiceClient } from "../src/api.js";
import type { LayerEvent } from "../src/types.js";
import completedEvents from "./fixtures/completed_events.json";

const events = completedEvents as unknown as LayerEvent[];

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

// Builds an SSE response from raw text chunks so tests control exactly
// where network reads split the frames.
function sseResponse(chunks: string[]): Response {
  const encoder = new TextEncoder();
  const stream = new ReadableStream<Uint8Array>({
    start(controller) {
      for (const chunk of chunks) {
        controller.enqueue(encoder.encode(chunk));
      }
      controller.close();
    },
  });
  return new Response(stream, {
    status: 200,
    headers: { "Content-Type": "text/event-stream" },
  });
}

function frames(source: LayerEvent[]): string {
  return source.map((event) => `data: ${JSON.stringify(event)}\n\n`).join("");
}

interface Call {
  url: string;
  init?: RequestInit;
}

function scriptedFetch(responses: Response[]): { fetch: typeof fetch; calls: Call[] } {
  const calls: Call[] = [];
  const queue = [...responses];
  const impl = (async (input: RequestInfo | URL, init?: RequestInit) => {
    calls.push({ url: String(input), init });
    const next = queue.shift();
    if (!next) throw new Error("no scripted response left");
    return next;
  }) as typeof fetch;
  return { fetch: impl, calls };
}

describe("ServiceClient requests", () => {
  it("posts a query and returns the run id", async () => {
    const { fetch, calls } = scriptedFetch([jsonResponse({ run_id: "abc123" })]);
    const client = new ServiceClient("", fetch);
    const result = await client.submitQuery({ question: "top 5 venues", source: "local" });
    expect(result.run_id).toBe("abc123");
    expect(calls[0].url).toBe("/api/query");
    expect(calls[0].init?.method).toBe("POST");
    expect(JSON.parse(String(calls[0].init?.body))).toEqual({
      question: "top 5 venues",
      source: "local",
    });
  });

  it("prefixes a configured base url", async () => {
    const { fetch, calls } = scriptedFetch([jsonResponse({ status: "ok" })]);
    const client = new ServiceClient("http://localhost:8000", fetch);
    await client.health();
    expect(calls[0].url).toBe("http://localhost:8000/api/health");
  });

  it("surfaces error bodies as ApiError with the service detail", async () => {
    const { fetch } = scriptedFetch([
      jsonResponse({ detail: "question must not be empty" }, 400),
    ]);
    const client = new ServiceClient("", fetch);
    const failure = await client.submitQuery({ question: "" }).then(
      () => null,
      (error) => error,
    );
    expect(failure).toBeInstanceOf(ApiError);
    expect(failure.status).toBe(400);
    expect(failure.detail).toBe("question must not be empty");
  });

  it("keeps the status text when the error body is not json", async () => {
    const { fetch } = scriptedFetch([
      new Response("boom", { status: 500, statusText: "Internal Server Error" }),
    ]);
    const client = new ServiceClient("", fetch);
    await expect(client.health()).rejects.toMatchObject({
      status: 500,
      detail: "Internal Server Error",
    });
  });

  it("unwraps the runs listing", async () => {
    const rows = [{ run_id: "r1" }, { run_id: "r2" }];
    const { fetch } = scriptedFetch([jsonResponse({ runs: rows })]);
    const client = new ServiceClient("", fetch);
    expect(await client.listRuns()).toEqual(rows);
  });

  it("submits benchmarks and polls their status", async () => {
    const { fetch, calls } = scriptedFetch([
      jsonResponse({ bench_id: "b1" }),
      jsonResponse({ status: "running" }),
    ]);
    const client = new ServiceClient("", fetch);
    const { bench_id } = await client.submitBench({ mode: "mock" });
    const status = await client.getBench(bench_id);
    expect(status.status).toBe("running");
    expect(calls.map((c) => c.url)).toEqual(["/api/bench", "/api/bench/b1"]);
  });
});

describe("ServiceClient event streaming", () => {
  it("delivers all events in order and stops at the terminal event", async () => {
    const { fetch, calls } = scriptedFetch([sseResponse([frames(events)])]);
    const client = new ServiceClient("", fetch);
    const seen: string[] = [];
    await client.streamEvents("run1", (event) => seen.push(event.event));
    expect(seen).toEqual(events.map((e) => e.event));
    expect(calls.length).toBe(1);
    expect(calls[0].url).toBe("/api/runs/run1/events");
  });

  it("parses frames that arrive split across reads", async () => {
    const raw = frames(events);
    const cut = Math.floor(raw.length / 3);
    const { fetch } = scriptedFetch([
      sseResponse([raw.slice(0, cut), raw.slice(cut, cut * 2), raw.slice(cut * 2)]),
    ]);
    const client = new ServiceClient("", fetch);
    const seen: LayerEvent[] = [];
    await client.streamEvents("run1", (event) => seen.push(event));
    expect(seen).toEqual(events);
  });

  it("reconnects after a drop and skips replayed events", async () => {
    const firstThree = frames(events.slice(0, 3));
    const fullReplay = frames(events);
    const { fetch, calls } = scriptedFetch([
      sseResponse([firstThree]), // drops before the terminal event
      sseResponse([fullReplay]), // server replays from the store
    ]);
    const client = new ServiceClient("", fetch);
    const seen: string[] = [];
    await client.streamEvents("run1", (event) => seen.push(event.event));
    expect(calls.length).toBe(2);
    expect(seen).toEqual(events.map((e) => e.event)); // no duplicates
  });

  it("gives up after repeated drops without a terminal event", async () => {
    const partial = () => sseResponse([frames(events.slice(0, 2))]);
    const { fetch } = scriptedFetch([partial(), partial(), partial(), partial(), partial()]);
    const client = new ServiceClient("", fetch);
    await expect(client.streamEvents("run1", () => {})).rejects.toThrow(
      /without a terminal event/,
    );
  });

  it("stops cleanly on a failed run's terminal event", async () => {
    const failure: LayerEvent[] = [
      { run_id: "r", event: "reasoner_started", payload: {}, at: "2026-01-01T00:00:00Z" },
      {
        run_id: "r",
        event: "run_failed",
        payload: { failure_reason: "plan_invalid" },
        at: "2026-01-01T00:00:01Z",
      },
    ];
    const { fetch } = scriptedFetch([sseResponse([frames(failure)])]);
    const client = new ServiceClient("", fetch);
    const seen: string[] = [];
    await client.streamEvents("r", (event) => seen.push(event.event));
    expect(seen).toEqual(["reasoner_started", "run_failed"]);
  });
});
