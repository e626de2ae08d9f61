import type {
  BenchStatus,
  LayerEvent,
  RunListItem,
  RunRecord,
} from "./types.js";

export interface QuerySubmission {
  question: string;
  source?: string;
  provider?: string;
  seed?: number;
  n?: number;
}

export interface BenchSubmission {
  suite?: string;
  runs_per_query?: number;
  mode?: string;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
    this.name = "ApiError";
  }
}

const TERMINAL_EVENTS = new Set(["run_completed", "run_failed"]);

/**
 * Thin typed wrapper over the service endpoints. The fetch implementation
 * is injectable so tests can run against canned responses with no backend.
 */
export class ServiceClient {
  private readonly fetchImpl: typeof fetch;

  constructor(
    private readonly baseUrl: string = "",
    fetchImpl?: typeof fetch,
  ) {
    this.fetchImpl = fetchImpl ?? fetch.bind(globalThis);
  }

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, init);
    if (!response.ok) {
      let detail = response.statusText;
      try {
        const body = await response.json();
        if (typeof body.detail === "string") detail = body.detail;
      } catch {
        // non-JSON error body, keep the status text
      }
      throw new ApiError(response.status, detail);
    }
    return response.json() as Promise<T>;
  }

  health(): Promise<{ status: string }> {
    return this.request("/api/health");
  }

  submitQuery(submission: QuerySubmission): Promise<{ run_id: string }> {
    return this.request("/api/query", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(submission),
    });
  }

  getRun(runId: string): Promise<RunRecord> {
    return this.request(`/api/runs/${runId}`);
  }

  async listRuns(): Promise<RunListItem[]> {
    const body = await this.request<{ runs: RunListItem[] }>("/api/runs");
    return body.runs;
  }

  submitBench(submission: BenchSubmission = {}): Promise<{ bench_id: string }> {
    return this.request("/api/bench", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(submission),
    });
  }

  getBench(benchId: string): Promise<BenchStatus> {
    return this.request(`/api/bench/${benchId}`);
  }

  /**
   * Follow a run's event stream, invoking onEvent once per event in
   * lifecycle order. The server replays the full history on every
   * connection, so a dropped stream is recovered by reopening and
   * skipping the events already delivered. Resolves after the terminal
   * event (run_completed or run_failed).
   */
  async streamEvents(
    runId: string,
    onEvent: (event: LayerEvent) => void,
    signal?: AbortSignal,
  ): Promise<void> {
    let delivered = 0;
    for (let attempt = 0; attempt < 5; attempt++) {
      const outcome = await this.readStream(runId, signal, (event, index) => {
        if (index < delivered) return; // already seen via replay
        delivered = index + 1;
        onEvent(event);
      });
      if (outcome === "terminal" || signal?.aborted) return;
    }
    throw new Error(`event stream for ${runId} ended without a terminal event`);
  }

  private async readStream(
    runId: string,
    signal: AbortSignal | undefined,
    deliver: (event: LayerEvent, index: number) => void,
  ): Promise<"terminal" | "dropped"> {
    const response = await this.fetchImpl(
      `${this.baseUrl}/api/runs/${runId}/events`,
      { signal },
    );
    if (!response.ok) {
      throw new ApiError(response.status, response.statusText);
    }
    if (!response.body) {
      throw new Error("event stream response has no body");
    }
    const reader = response.body.getReader();
    const decoder = new TextDecoder();
    let buffer = "";
    let index = 0;
    try {
      for (;;) {
        const { done, value } = await reader.read();
        if (done) break;
        buffer += decoder.decode(value, { stream: true });
        let boundary: number;
        while ((boundary = buffer.indexOf("\n\n")) !== -1) {
          const frame = buffer.slice(0, boundary);
          buffer = buffer.slice(boundary + 2);
          const event = parseFrame(frame);
          if (event === null) continue;
          deliver(event, index);
          index += 1;
          if (TERMINAL_EVENTS.has(event.event)) return "terminal";
        }
      }
    } finally {
      reader.releaseLock();
    }
    return "dropped";
  }
}

function parseFrame(frame: string): LayerEvent | null {
  const dataLines = frame
    .split("\n")
    .filter((line) => line.startsWith("data:"))
    .map((line) => line.slice(5).trimStart());
  if (dataLines.length === 0) return null;
  return JSON.parse(dataLines.join("\n")) as LayerEvent;
}
