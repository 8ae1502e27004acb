// Results view: render benchmark chart-data files (chart_bar.json /
// chart_lines.json emitted by the bench CLI) as plain SVG.

export interface ChartData {
  kind: string;
  title: string;
  labels: string[];
  series: { name: string; values: number[] }[];
}

const COLORS = ["#4363d8", "#e6194b", "#3cb44b", "#f58231"];
const W = 640;
const H = 360;
const PAD = { left: 64, right: 16, top: 36, bottom: 48 };

function svgEl(tag: string, attrs: Record<string, string | number>): SVGElement {
  const el = document.createElementNS("http://www.w3.org/2000/svg", tag);
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, String(v));
  return el;
}

export function renderChart(container: HTMLElement, data: ChartData): void {
  container.textContent = "";
  const svg = svgEl("svg", {
    viewBox: `0 0 ${W} ${H}`,
    width: "100%",
    role: "img",
  }) as SVGSVGElement;
  const plotW = W - PAD.left - PAD.right;
  const plotH = H - PAD.top - PAD.bottom;
  const maxValue = Math.max(...data.series.flatMap((s) => s.values), 1e-9);

  const title = svgEl("text", { x: W / 2, y: 20, "text-anchor": "middle", class: "chart-title" });
  title.textContent = data.title;
  svg.appendChild(title);

  // y axis with 4 gridlines
  for (let i = 0; i <= 4; i++) {
    const frac = i / 4;
    const y = PAD.top + plotH * (1 - frac);
    svg.appendChild(svgEl("line", {
      x1: PAD.left, y1: y, x2: W - PAD.right, y2: y,
      stroke: "#ddd", "stroke-width": 1,
    }));
    const label = svgEl("text", {
      x: PAD.left - 6, y: y + 4, "text-anchor": "end", class: "chart-axis",
    });
    label.textContent = (maxValue * frac).toPrecision(3);
    svg.appendChild(label);
  }

  const groupW = plotW / data.labels.length;
  data.labels.forEach((label, i) => {
    const text = svgEl("text", {
      x: PAD.left + groupW * (i + 0.5),
      y: H - PAD.bottom + 18,
      "text-anchor": "middle",
      class: "chart-axis",
    });
    text.textContent = label;
    svg.appendChild(text);
  });

  if (data.kind === "grouped-bar") {
    const barW = (groupW * 0.7) / data.series.length;
    data.series.forEach((series, s) => {
      series.values.forEach((value, i) => {
        const h = (value / maxValue) * plotH;
        svg.appendChild(svgEl("rect", {
          x: PAD.left + groupW * i + groupW * 0.15 + barW * s,
          y: PAD.top + plotH - h,
          width: barW - 2,
          height: h,
          fill: COLORS[s % COLORS.length],
          class: "chart-bar",
          "data-series": series.name,
        }));
      });
    });
  } else {
    data.series.forEach((series, s) => {
      const points = series.values
        .map((value, i) => {
          const x = PAD.left + groupW * (i + 0.5);
          const y = PAD.top + plotH * (1 - value / maxValue);
          return `${x},${y}`;
        })
        .join(" ");
      svg.appendChild(svgEl("polyline", {
        points,
        fill: "none",
        stroke: COLORS[s % COLORS.length],
        "stroke-width": 2,
        class: "chart-line",
        "data-series": series.name,
      }));
    });
  }

  // legend
  data.series.forEach((series, s) => {
    const x = PAD.left + 12 + s * 180;
    svg.appendChild(svgEl("rect", {
      x, y: PAD.top + 4, width: 12, height: 12,
      fill: COLORS[s % COLORS.length],
    }));
    const label = svgEl("text", { x: x + 18, y: PAD.top + 14, class: "chart-axis" });
    label.textContent = series.name;
    svg.appendChild(label);
  });

  container.appendChild(svg);
}

export class ResultsController {
  private readonly chartEl: HTMLElement;
  private readonly messageEl: HTMLElement;

  constructor(root: HTMLElement) {
    this.chartEl = root.querySelector("#results-chart")!;
    this.messageEl = root.querySelector("#results-message")!;
    const fileInput = root.querySelector<HTMLInputElement>("#results-file")!;
    fileInput.addEventListener("change", () => {
      const file = fileInput.files?.[0];
      if (file) void this.loadFile(file);
    });
  }

  async loadFile(file: File): Promise<void> {
    try {
      this.show(JSON.parse(await file.text()) as ChartData);
    } catch (err) {
      this.messageEl.textContent = `Not a chart-data file: ${err}`;
    }
  }

  show(data: ChartData): void {
    if (!data.labels || !data.series) {
      this.messageEl.textContent = "Not a chart-data file.";
      return;
    }
    this.messageEl.textContent = "";
    renderChart(this.chartEl, data);
  }
}
