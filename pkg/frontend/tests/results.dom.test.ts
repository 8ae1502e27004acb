import { beforeEach, describe, expect, it } from "vitest";

import { ChartData, renderChart } from "../src/results";
import { mountApp } from "./helpers";

const DATA: ChartData = {
  kind: "grouped-bar",
  title: "Solving Time Comparison Across Difficulties",
  labels: ["beginner", "easy", "medium", "hard", "expert"],
  series: [
    { name: "Backtracking (ms)", values: [0.9, 4.5, 14.8, 173.5, 360.7] },
    { name: "Heuristic (ms)", values: [0.7, 3.3, 8.3, 78.9, 123.8] },
  ],
};

beforeEach(() => {
  mountApp();
});

describe("chart rendering", () => {
  it("draws one bar per (difficulty, series) pair", () => {
    const container = document.querySelector<HTMLElement>("#results-chart")!;
    renderChart(container, DATA);
    const bars = container.querySelectorAll(".chart-bar");
    expect(bars).toHaveLength(10);
    const byName = container.querySelectorAll(
      '.chart-bar[data-series="Heuristic (ms)"]',
    );
    expect(byName).toHaveLength(5);
    expect(container.textContent).toContain("expert");
    expect(container.textContent).toContain(DATA.title);
  });

  it("draws one polyline per series in line mode", () => {
    const container = document.querySelector<HTMLElement>("#results-chart")!;
    renderChart(container, { ...DATA, kind: "line" });
    const lines = container.querySelectorAll(".chart-line");
    expect(lines).toHaveLength(2);
    const points = lines[0].getAttribute("points")!.split(" ");
    expect(points).toHaveLength(5);
  });
});
