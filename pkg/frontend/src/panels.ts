import { renderChart } from "./chart.js";
import type {
  BenchReport,
  LayerEvent,
  Narrative,
  QueryPlan,
  ResultSummary,
  RunLedger,
  RunListItem,
  RunRecord,
} from "./types.js";

/**
 * Render functions for each section of the console. All of them are pure:
 * payload in, detached element out. Nothing here computes a number, so
 * everything on screen can be traced back to a service response field.
 */

function section(title: string, className: string): HTMLElement {
  const box = document.createElement("section");
  box.className = `panel ${className}`;
  const heading = document.createElement("h2");
  heading.textContent = title;
  box.appendChild(heading);
  return box;
}

function appendCells(row: HTMLTableRowElement, texts: string[]): void {
  for (const text of texts) {
    const cell = document.createElement("td");
    cell.textContent = text;
    row.appendChild(cell);
  }
}

function jsonBlock(value: unknown): HTMLPreElement {
  const pre = document.createElement("pre");
  pre.className = "json-block";
  pre.textContent = JSON.stringify(value, null, 2);
  return pre;
}

function pending(box: HTMLElement, label: string): HTMLElement {
  const note = document.createElement("p");
  note.className = "pending";
  note.textContent = label;
  box.appendChild(note);
  return box;
}

export function planPanel(plan: QueryPlan | null): HTMLElement {
  const box = section("Reasoner · query plan", "panel-reasoner");
  if (plan === null) return pending(box, "waiting for plan");
  box.appendChild(jsonBlock(plan));
  return box;
}

export function summaryPanel(summary: ResultSummary | null): HTMLElement {
  const box = section("Executor · statistical summary", "panel-executor");
  if (summary === null) return pending(box, "waiting for summary");
  box.appendChild(jsonBlock(summary));
  return box;
}

export function narrativePanel(
  narrative: Narrative | null,
  summary: ResultSummary | null,
): HTMLElement {
  const box = section("Synthesizer · narrative", "panel-synthesizer");
  if (narrative === null) return pending(box, "waiting for narrative");
  const text = document.createElement("p");
  text.className = "narrative-text";
  text.textContent = narrative.text;
  box.appendChild(text);
  box.appendChild(renderChart(narrative.chart, summary));
  return box;
}

const LEDGER_LAYERS = ["reasoner", "executor", "synthesizer"] as const;

export function ledgerPanel(
  ledger: RunLedger,
  ledgerTotal: number,
): HTMLElement {
  const box = section("Token ledger", "panel-ledger");
  const table = document.createElement("table");
  table.className = "ledger-table";
  const head = document.createElement("thead");
  const headRow = document.createElement("tr");
  for (const label of ["layer", "input", "output", ""]) {
    const cell = document.createElement("th");
    cell.textContent = label;
    headRow.appendChild(cell);
  }
  head.appendChild(headRow);
  table.appendChild(head);

  const body = document.createElement("tbody");
  for (const layer of LEDGER_LAYERS) {
    const usage = ledger[layer];
    const row = document.createElement("tr");
    row.className = `ledger-row ledger-${layer}`;
    if (layer === "executor" && usage.input_tokens === 0 && usage.output_tokens === 0) {
      row.classList.add("zero-tokens");
    }
    appendCells(row, [
      layer,
      String(usage.input_tokens),
      String(usage.output_tokens),
      usage.estimated ? "est." : "",
    ]);
    body.appendChild(row);
  }
  table.appendChild(body);

  // the total comes from the record's own ledger_total field, not a
  // client-side sum
  const foot = document.createElement("tfoot");
  const footRow = document.createElement("tr");
  footRow.className = "ledger-total";
  const totalLabel = document.createElement("td");
  totalLabel.textContent = "total";
  const totalCell = document.createElement("td");
  totalCell.colSpan = 2;
  totalCell.textContent = String(ledgerTotal);
  footRow.appendChild(totalLabel);
  footRow.appendChild(totalCell);
  footRow.appendChild(document.createElement("td"));
  foot.appendChild(footRow);
  table.appendChild(foot);
  box.appendChild(table);
  return box;
}

export function errorBanner(failureReason: string): HTMLElement {
  const banner = document.createElement("div");
  banner.className = "error-banner";
  banner.setAttribute("role", "alert");
  banner.textContent = `run failed: ${failureReason}`;
  return banner;
}

export function eventLogPanel(events: LayerEvent[]): HTMLElement {
  const box = section("Event log", "panel-events");
  const list = document.createElement("ol");
  list.className = "event-log";
  for (const event of events) {
    const item = document.createElement("li");
    item.dataset.event = event.event;
    item.textContent = `${event.at}  ${event.event}`;
    list.appendChild(item);
  }
  box.appendChild(list);
  return box;
}

export function historyPanel(
  items: RunListItem[],
  onSelect?: (runId: string) => void,
): HTMLElement {
  const box = section("Run history", "panel-history");
  if (items.length === 0) return pending(box, "no runs yet");
  const list = document.createElement("ul");
  list.className = "history-list";
  for (const item of items) {
    const entry = document.createElement("li");
    entry.dataset.runId = item.run_id;
    const button = document.createElement("button");
    button.type = "button";
    button.className = `history-item status-${item.status}`;
    const total = item.ledger_total === null ? "" : `${item.ledger_total} tokens`;
    button.textContent = `${item.query} · ${item.status}${total ? " · " + total : ""}`;
    if (onSelect) {
      button.addEventListener("click", () => onSelect(item.run_id));
    }
    entry.appendChild(button);
    list.appendChild(entry);
  }
  box.appendChild(list);
  return box;
}

export function benchPanel(report: BenchReport | null, running: boolean): HTMLElement {
  const box = section("Benchmark", "panel-bench");
  if (running) return pending(box, "benchmark running…");
  if (report === null) return pending(box, "no benchmark yet");
  const table = document.createElement("table");
  table.className = "bench-table";
  const rows: Array<[string, string]> = [
    ["mean tokens per query", String(report.res_mean)],
    ["stddev", String(report.res_stddev)],
    ["naive baseline mean", String(report.naive_mean)],
    ["savings fraction", String(report.savings_fraction)],
    ["failed runs", String(report.failed_count)],
  ];
  for (const [label, value] of rows) {
    const row = document.createElement("tr");
    appendCells(row, [label, value]);
    table.appendChild(row);
  }
  box.appendChild(table);
  if (report.flags.length > 0) {
    const flags = document.createElement("p");
    flags.className = "bench-flags";
    flags.textContent = `flags: ${report.flags.join("; ")}`;
    box.appendChild(flags);
  }
  return box;
}

/**
 * Compose the full view of one run: the three layer panels in pipeline
 * order, the ledger, and an error banner when the run failed. This is
 * the single entry point the app uses after every event, so state on
 * screen always mirrors the latest record.
 */
export function renderRunView(record: RunRecord): HTMLElement {
  const view = document.createElement("div");
  view.className = "run-view";
  if (record.status === "failed" && record.failure_reason) {
    view.appendChild(errorBanner(record.failure_reason));
  }
  view.appendChild(planPanel(record.plan));
  view.appendChild(summaryPanel(record.summary));
  view.appendChild(narrativePanel(record.narrative, record.summary));
  view.appendChild(ledgerPanel(record.ledger, record.ledger_total));
  return view;
}
