import { describe, expect, it } from "vitest";
import { renderChart } from "../src/chart.js";
import type { ChartConfig, ResultSummary, RunRecord } from "../src/types.js";
import completedFixture from "./fixtures/completed_run.json";
import comparisonFixture from "./fixtures/comparison_run.json";
import rankingFixture from "./fixtures/ranking_run.json";

const completed = completedFixture as unknown as RunRecord;
const comparison = comparisonFixture as unknown as RunRecord;
const ranking = rankingFixture as unknown as RunRecord;

function svgTexts(element: HTMLElement, selector: string): string[] {
  return Array.from(element.querySelectorAll(selector)).map(
    (node) => node.textContent ?? "",
  );
}

describe("line chart", () => {
  const element = renderChart(completed.narrative!.chart, completed.summary);

  it("draws one polyline per referenced series", () => {
    expect(element.querySelectorAll("polyline").length).toBe(1);
    expect(
      element.querySelector("polyline")!.getAttribute("data-series"),
    ).toBe("graphene");
  });

  it("labels every point with its exact summary value", () => {
    const values = svgTexts(element, ".value-label");
    const expected = completed.summary!.series[0].points.map((p) => String(p.value));
    expect(values).toEqual(expected);
  });

  it("uses the config's axis labels", () => {
    const axes = svgTexts(element, ".axis-label");
    expect(axes).toContain("year");
    expect(axes).toContain("publications");
  });

  it("ticks the x axis with the stored point labels", () => {
    const ticks = svgTexts(element, ".tick-label");
    expect(ticks).toEqual(["2015", "2016", "2017", "2018", "2019", "2020"]);
  });
});

describe("grouped bar chart", () => {
  const element = renderChart(comparison.narrative!.chart, comparison.summary);

  it("draws a rect per series per bucket", () => {
    const rects = element.querySelectorAll("rect[data-series]");
    const buckets = comparison.summary!.series[0].points.length;
    expect(rects.length).toBe(buckets * comparison.summary!.series.length);
  });

  it("shows a legend naming both series", () => {
    const legend = svgTexts(element, ".legend-label");
    expect(legend).toEqual(comparison.narrative!.chart!.series_refs);
  });

  it("labels bars with exact values", () => {
    const shown = new Set(svgTexts(element, ".value-label"));
    for (const series of comparison.summary!.series) {
      for (const point of series.points) {
        expect(shown.has(String(point.value))).toBe(true);
      }
    }
  });
});

describe("ranking bar chart", () => {
  const element = renderChart(ranking.narrative!.chart, ranking.summary);

  it("keeps bars in the stored bucket order", () => {
    const order = Array.from(element.querySelectorAll("rect")).map((r) =>
      r.getAttribute("data-label"),
    );
    expect(order).toEqual(ranking.summary!.series[0].points.map((p) => p.label));
  });

  it("labels each bar with its exact value", () => {
    const values = svgTexts(element, ".value-label");
    expect(values).toEqual(
      ranking.summary!.series[0].points.map((p) => String(p.value)),
    );
  });
});

describe("totals-only comparison bar chart", () => {
  const summary: ResultSummary = {
    series: [],
    totals: { crispr: 140, "gene therapy": 95 },
    metadata: {
      source_name: "synthetic",
      dataset_size_estimate: 1000,
      retrieved_at: "2020-01-01T00:00:00Z",
      plan_echo: { intent: "comparison", subjects: ["crispr", "gene therapy"] },
    },
  };
  const chart: ChartConfig = {
    chart_type: "bar",
    x_label: "subject",
    y_label: "publications",
    series_refs: ["crispr", "gene therapy"],
  };

  it("reads bar heights straight from totals", () => {
    const element = renderChart(chart, summary);
    expect(svgTexts(element, ".value-label")).toEqual(["140", "95"]);
  });
});

describe("degenerate inputs", () => {
  it("hides the chart area when the narrative has no config", () => {
    const element = renderChart(null, completed.summary);
    expect(element.hidden).toBe(true);
    expect(element.querySelector("svg")).toBeNull();
  });

  it("shows a notice instead of guessing when a series_ref is missing", () => {
    const config: ChartConfig = {
      chart_type: "line",
      x_label: "year",
      y_label: "publications",
      series_refs: ["graphene", "unobtainium"],
    };
    const element = renderChart(config, completed.summary);
    expect(element.querySelector("svg")).toBeNull();
    expect(element.querySelector(".chart-notice")?.textContent).toContain(
      "unobtainium",
    );
  });

  it("treats a missing summary like a hidden chart", () => {
    const element = renderChart(completed.narrative!.chart, null);
    expect(element.hidden).toBe(true);
  });
});
