import { ApiError, ServiceClient } from "./api.js";
import {
  benchPanel,
  errorBanner,
  eventLogPanel,
  historyPanel,
  ledgerPanel,
  narrativePanel,
  planPanel,
  renderRunView,
  summaryPanel,
} from "./panels.js";
import type {
  BenchReport,
  LayerEvent,
  Narrative,
  QueryPlan,
  ResultSummary,
} from "./types.js";

interface LiveState {
  plan: QueryPlan | null;
  summary: ResultSummary | null;
  narrative: Narrative | null;
  failureReason: string | null;
  events: LayerEvent[];
}

function freshState(): LiveState {
  return { plan: null, summary: null, narrative: null, failureReason: null, events: [] };
}

/**
 * Wire the console into a root element. Everything rendered comes from
 * the service client; the controller only moves payloads between the
 * stream and the panels.
 */
export function createApp(root: HTMLElement, client: ServiceClient) {
  root.innerHTML = `
    <header class="masthead">
      <h1>scholarlens console</h1>
      <p class="tagline">ask, watch each layer work, inspect the token bill</p>
    </header>
    <form class="ask-form">
      <input type="text" name="question" placeholder="e.g. How has graphene research evolved from 2015 to 2020?" autocomplete="off">
      <select name="source">
        <option value="local">local synthetic</option>
        <option value="crossref">crossref</option>
      </select>
      <select name="provider">
        <option value="mock">mock provider</option>
        <option value="live">live provider</option>
      </select>
      <button type="submit" disabled>ask</button>
      <span class="form-error" role="alert" hidden></span>
    </form>
    <div class="layout">
      <div class="run-slot"></div>
      <aside class="side">
        <div class="events-slot"></div>
        <div class="history-slot"></div>
        <div class="bench-slot"></div>
        <button type="button" class="bench-button">run mock benchmark</button>
      </aside>
    </div>
  `;

  const form = root.querySelector<HTMLFormElement>(".ask-form")!;
  const input = form.querySelector<HTMLInputElement>("input[name=question]")!;
  const sourceSelect = form.querySelector<HTMLSelectElement>("select[name=source]")!;
  const providerSelect = form.querySelector<HTMLSelectElement>("select[name=provider]")!;
  const submit = form.querySelector<HTMLButtonElement>("button[type=submit]")!;
  const formError = form.querySelector<HTMLElement>(".form-error")!;
  const runSlot = root.querySelector<HTMLElement>(".run-slot")!;
  const eventsSlot = root.querySelector<HTMLElement>(".events-slot")!;
  const historySlot = root.querySelector<HTMLElement>(".history-slot")!;
  const benchSlot = root.querySelector<HTMLElement>(".bench-slot")!;
  const benchButton = root.querySelector<HTMLButtonElement>(".bench-button")!;

  let state = freshState();
  let streaming = false;

  input.addEventListener("input", () => {
    submit.disabled = streaming || input.value.trim() === "";
  });

  function renderLive(): void {
    const view = document.createElement("div");
    view.className = "run-view";
    if (state.failureReason) view.appendChild(errorBanner(state.failureReason));
    view.appendChild(planPanel(state.plan));
    view.appendChild(summaryPanel(state.summary));
    view.appendChild(narrativePanel(state.narrative, state.summary));
    runSlot.replaceChildren(view);
    eventsSlot.replaceChildren(eventLogPanel(state.events));
  }

  function applyEvent(event: LayerEvent): void {
    state.events.push(event);
    const payload = event.payload as Record<string, any>;
    switch (event.event) {
      case "reasoner_completed":
        state.plan = payload.plan;
        break;
      case "executor_completed":
        state.summary = payload.summary;
        break;
      case "synthesizer_completed":
        state.narrative = payload.narrative;
        break;
      case "run_failed":
        state.failureReason = payload.failure_reason;
        break;
    }
    renderLive();
  }

  async function showRecord(runId: string): Promise<void> {
    const record = await client.getRun(runId);
    runSlot.replaceChildren(renderRunView(record));
  }

  async function refreshHistory(): Promise<void> {
    try {
      const runs = await client.listRuns();
      historySlot.replaceChildren(
        historyPanel(runs, (runId) => void showRecord(runId)),
      );
    } catch {
      // history is a convenience; leave the previous panel in place
    }
  }

  form.addEventListener("submit", (raised) => {
    raised.preventDefault();
    void submitQuestion();
  });

  async function submitQuestion(): Promise<void> {
    const question = input.value.trim();
    if (question === "" || streaming) return;
    formError.hidden = true;
    streaming = true;
    submit.disabled = true;
    state = freshState();
    renderLive();
    try {
      const { run_id } = await client.submitQuery({
        question,
        source: sourceSelect.value,
        provider: providerSelect.value,
      });
      await client.streamEvents(run_id, applyEvent);
      await showRecord(run_id);
      await refreshHistory();
    } catch (error) {
      if (error instanceof ApiError) {
        formError.textContent = error.detail;
        formError.hidden = false;
      } else {
        formError.textContent = String(error);
        formError.hidden = false;
      }
    } finally {
      streaming = false;
      submit.disabled = input.value.trim() === "";
    }
  }

  benchButton.addEventListener("click", () => void runBench());

  async function runBench(): Promise<void> {
    benchButton.disabled = true;
    benchSlot.replaceChildren(benchPanel(null, true));
    try {
      const { bench_id } = await client.submitBench({ mode: "mock" });
      const report = await pollBench(bench_id);
      benchSlot.replaceChildren(benchPanel(report, false));
    } catch (error) {
      const note = document.createElement("p");
      note.className = "bench-error";
      note.textContent = `benchmark failed: ${error instanceof Error ? error.message : error}`;
      benchSlot.replaceChildren(note);
    } finally {
      benchButton.disabled = false;
    }
  }

  async function pollBench(benchId: string): Promise<BenchReport> {
    for (;;) {
      const status = await client.getBench(benchId);
      if (status.status === "completed" && status.report) return status.report;
      if (status.status === "failed") {
        throw new Error(status.detail ?? "benchmark failed");
      }
      await new Promise((resolve) => setTimeout(resolve, 1000));
    }
  }

  renderLive();
  void refreshHistory();

  return { submitQuestion, showRecord, refreshHistory };
}

// mount automatically when loaded as the page script
const rootElement = document.getElementById("app");
if (rootElement) {
  createApp(rootElement, new ServiceClient(""));
}

export {
  benchPanel,
  errorBanner,
  eventLogPanel,
  historyPanel,
  ledgerPanel,
  narrativePanel,
  planPanel,
  renderRunView,
  summaryPanel,
};
