import type { ChartConfig, DataPoint, ResultSummary, Series } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const WIDTH = 640;
const HEIGHT = 320;
const MARGIN = { top: 24, right: 20, bottom: 72, left: 56 };
const PLOT_W = WIDTH - MARGIN.left - MARGIN.right;
const PLOT_H = HEIGHT - MARGIN.top - MARGIN.bottom;

const SERIES_COLORS = ["#4269d0", "#efb118", "#ff725c", "#6cc5b0", "#a463f2"];

/**
 * Render a chart from the synthesizer's config plus the executor summary
 * it references. Every number drawn comes straight out of the summary:
 * values label their own points and bars, and there is no invented axis
 * scale text. Returns a detached element for the caller to mount.
 *
 * A config that references a series the summary does not contain yields
 * a notice instead of a chart; we never guess at data.
 */
export function renderChart(
  chart: ChartConfig | null,
  summary: ResultSummary | null,
): HTMLElement {
  const container = document.createElement("div");
  container.className = "chart";
  if (chart === null || summary === null) {
    container.hidden = true;
    return container;
  }

  const missing = unresolvedRefs(chart, summary);
  if (missing.length > 0) {
    const notice = document.createElement("p");
    notice.className = "chart-notice";
    notice.textContent = `chart omitted: no data for ${missing.join(", ")}`;
    container.appendChild(notice);
    return container;
  }

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  svg.setAttribute("role", "img");

  switch (chart.chart_type) {
    case "line":
      drawLines(svg, refSeries(chart, summary));
      break;
    case "grouped_bar":
      drawGroupedBars(svg, refSeries(chart, summary));
      break;
    case "bar":
      drawBars(svg, barData(chart, summary));
      break;
  }
  drawAxisLabels(svg, chart);
  if (chart.chart_type !== "bar" && chart.series_refs.length > 1) {
    drawLegend(svg, chart.series_refs);
  }
  container.appendChild(svg);
  return container;
}

function unresolvedRefs(chart: ChartConfig, summary: ResultSummary): string[] {
  const subjects = new Set(summary.series.map((s) => s.subject));
  if (chart.chart_type === "bar") {
    // a single bar ref may point at series buckets (rankings); multiple
    // refs must all resolve through totals
    if (chart.series_refs.length === 1) {
      return chart.series_refs.filter(
        (ref) => !subjects.has(ref) && !(ref in summary.totals),
      );
    }
    return chart.series_refs.filter((ref) => !(ref in summary.totals));
  }
  return chart.series_refs.filter((ref) => !subjects.has(ref));
}

function refSeries(chart: ChartConfig, summary: ResultSummary): Series[] {
  const bySubject = new Map(summary.series.map((s) => [s.subject, s]));
  return chart.series_refs.map((ref) => bySubject.get(ref)!);
}

function barData(chart: ChartConfig, summary: ResultSummary): DataPoint[] {
  const bySubject = new Map(summary.series.map((s) => [s.subject, s]));
  const only = chart.series_refs.length === 1 && bySubject.get(chart.series_refs[0]);
  if (only) {
    return only.points; // ranking: one bar per bucket, stored order
  }
  // totals-only comparison: bars read straight from totals so the
  // numbers shown are the summary's own, never a client-side sum
  return chart.series_refs.map((ref) => ({
    label: ref,
    value: summary.totals[ref],
  }));
}

function maxValue(seriesList: Series[]): number {
  let max = 0;
  for (const series of seriesList) {
    for (const point of series.points) {
      if (point.value > max) max = point.value;
    }
  }
  return max;
}

function yScale(max: number): (value: number) => number {
  const top = max > 0 ? max : 1;
  return (value) => MARGIN.top + PLOT_H - (value / top) * PLOT_H;
}

function el(name: string, attrs: Record<string, string>, text?: string) {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  if (text !== undefined) node.textContent = text;
  return node;
}

function drawLines(svg: SVGElement, seriesList: Series[]): void {
  const scale = yScale(maxValue(seriesList));
  const labels = seriesList[0]?.points.map((p) => p.label) ?? [];
  const step = PLOT_W / Math.max(labels.length - 1, 1);
  const x = (i: number) => MARGIN.left + i * step;

  seriesList.forEach((series, si) => {
    const color = SERIES_COLORS[si % SERIES_COLORS.length];
    const coords = series.points.map((p, i) => `${x(i)},${scale(p.value)}`);
    svg.appendChild(
      el("polyline", {
        points: coords.join(" "),
        fill: "none",
        stroke: color,
        "stroke-width": "2",
        "data-series": series.subject,
      }),
    );
    series.points.forEach((point, i) => {
      svg.appendChild(
        el("circle", { cx: String(x(i)), cy: String(scale(point.value)), r: "3", fill: color }),
      );
      svg.appendChild(
        el(
          "text",
          {
            x: String(x(i)),
            y: String(scale(point.value) - 8),
            "text-anchor": "middle",
            class: "value-label",
          },
          String(point.value),
        ),
      );
    });
  });
  labels.forEach((label, i) => {
    svg.appendChild(tickLabel(x(i), label));
  });
}

function drawBars(svg: SVGElement, points: DataPoint[]): void {
  const scale = yScale(Math.max(...points.map((p) => p.value), 0));
  const slot = PLOT_W / Math.max(points.length, 1);
  const barWidth = slot * 0.6;

  points.forEach((point, i) => {
    const x = MARGIN.left + i * slot + (slot - barWidth) / 2;
    const y = scale(point.value);
    svg.appendChild(
      el("rect", {
        x: String(x),
        y: String(y),
        width: String(barWidth),
        height: String(MARGIN.top + PLOT_H - y),
        fill: SERIES_COLORS[0],
        "data-label": point.label,
      }),
    );
    svg.appendChild(
      el(
        "text",
        { x: String(x + barWidth / 2), y: String(y - 6), "text-anchor": "middle", class: "value-label" },
        String(point.value),
      ),
    );
    svg.appendChild(tickLabel(x + barWidth / 2, point.label));
  });
}

function drawGroupedBars(svg: SVGElement, seriesList: Series[]): void {
  const scale = yScale(maxValue(seriesList));
  const labels = seriesList[0]?.points.map((p) => p.label) ?? [];
  const slot = PLOT_W / Math.max(labels.length, 1);
  const groupWidth = slot * 0.7;
  const barWidth = groupWidth / Math.max(seriesList.length, 1);

  labels.forEach((label, gi) => {
    const groupX = MARGIN.left + gi * slot + (slot - groupWidth) / 2;
    seriesList.forEach((series, si) => {
      const point = series.points[gi];
      if (!point) return;
      const x = groupX + si * barWidth;
      const y = scale(point.value);
      svg.appendChild(
        el("rect", {
          x: String(x),
          y: String(y),
          width: String(barWidth * 0.9),
          height: String(MARGIN.top + PLOT_H - y),
          fill: SERIES_COLORS[si % SERIES_COLORS.length],
          "data-series": series.subject,
          "data-label": point.label,
        }),
      );
      svg.appendChild(
        el(
          "text",
          {
            x: String(x + (barWidth * 0.9) / 2),
            y: String(y - 4),
            "text-anchor": "middle",
            class: "value-label",
          },
          String(point.value),
        ),
      );
    });
    svg.appendChild(tickLabel(MARGIN.left + gi * slot + slot / 2, label));
  });
}

function tickLabel(x: number, label: string) {
  const y = MARGIN.top + PLOT_H + 16;
  const shortened = label.length > 18 ? label.slice(0, 17) + "…" : label;
  const node = el(
    "text",
    { x: String(x), y: String(y), "text-anchor": "end", class: "tick-label" },
    shortened,
  );
  node.setAttribute("transform", `rotate(-30 ${x} ${y})`);
  return node;
}

function drawAxisLabels(svg: SVGElement, chart: ChartConfig): void {
  svg.appendChild(
    el("line", {
      x1: String(MARGIN.left),
      y1: String(MARGIN.top + PLOT_H),
      x2: String(MARGIN.left + PLOT_W),
      y2: String(MARGIN.top + PLOT_H),
      stroke: "currentColor",
      "stroke-opacity": "0.4",
    }),
  );
  svg.appendChild(
    el(
      "text",
      {
        x: String(MARGIN.left + PLOT_W / 2),
        y: String(HEIGHT - 6),
        "text-anchor": "middle",
        class: "axis-label",
      },
      chart.x_label,
    ),
  );
  const axisY = el(
    "text",
    { x: "0", y: "0", "text-anchor": "middle", class: "axis-label" },
    chart.y_label,
  );
  axisY.setAttribute(
    "transform",
    `translate(14 ${MARGIN.top + PLOT_H / 2}) rotate(-90)`,
  );
  svg.appendChild(axisY);
}

function drawLegend(svg: SVGElement, refs: string[]): void {
  refs.forEach((ref, i) => {
    const x = MARGIN.left + i * 150;
    svg.appendChild(
      el("rect", {
        x: String(x),
        y: "4",
        width: "10",
        height: "10",
        fill: SERIES_COLORS[i % SERIES_COLORS.length],
      }),
    );
    svg.appendChild(
      el("text", { x: String(x + 14), y: "13", class: "legend-label" }, ref),
    );
  });
}
