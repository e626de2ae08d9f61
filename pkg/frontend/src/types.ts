/**
 * Shapes of the JSON the service returns. These mirror the wire format
 * exactly; the UI never adds fields or computes values of its own.
 */

export interface TimeRange {
  from_year: number;
  until_year: number;
}

export interface QueryPlan {
  intent: "trend" | "comparison" | "ranking";
  subjects: string[];
  time_range?: TimeRange | null;
  top_n?: number | null;
  rank_dimension?: string | null;
}

export interface DataPoint {
  label: string;
  value: number;
}

export interface Series {
  subject: string;
  points: DataPoint[];
}

export interface SummaryMetadata {
  source_name: string;
  dataset_size_estimate: number;
  retrieved_at: string;
  plan_echo: QueryPlan;
}

export interface ResultSummary {
  series: Series[];
  totals: Record<string, number>;
  metadata: SummaryMetadata;
}

export interface ChartConfig {
  chart_type: "line" | "bar" | "grouped_bar";
  x_label: string;
  y_label: string;
  series_refs: string[];
}

export interface Narrative {
  text: string;
  chart: ChartConfig | null;
}

export interface TokenUsage {
  input_tokens: number;
  output_tokens: number;
  estimated: boolean;
}

export interface RunLedger {
  reasoner: TokenUsage;
  executor: TokenUsage;
  synthesizer: TokenUsage;
}

export type RunStatus = "running" | "completed" | "failed";

export interface RunRecord {
  run_id: string;
  query: { text: string };
  status: RunStatus;
  started_at: string;
  finished_at: string | null;
  ledger: RunLedger;
  ledger_total: number;
  plan: QueryPlan | null;
  summary: ResultSummary | null;
  narrative: Narrative | null;
  failure_reason: string | null;
}

export interface RunListItem {
  run_id: string;
  status: RunStatus;
  query: string;
  started_at: string;
  finished_at: string | null;
  ledger_total: number | null;
}

export type LayerEventName =
  | "reasoner_started"
  | "reasoner_completed"
  | "executor_started"
  | "executor_completed"
  | "synthesizer_started"
  | "synthesizer_completed"
  | "run_completed"
  | "run_failed";

export interface LayerEvent {
  run_id: string;
  event: LayerEventName;
  payload: Record<string, unknown>;
  at: string;
}

export interface BenchReport {
  runs: Array<Record<string, unknown>>;
  res_mean: number;
  res_stddev: number;
  naive_mean: number;
  savings_fraction: number;
  failed_count: number;
  naive_by_query: Record<string, number>;
  flags: string[];
}

export interface BenchStatus {
  status: "running" | "completed" | "failed";
  report?: BenchReport;
  artifacts_dir?: string;
  detail?: string;
}
