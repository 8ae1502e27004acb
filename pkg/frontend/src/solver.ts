// Solver view: paste a puzzle, run both algorithms server-side, show
// the results side by side. Timings are rendered verbatim from the
// response (unit formatting only).

import { AlgorithmResult, SudokuApi } from "./api";
import { isConsistent, parseGridText, serializeGrid } from "./grid";
import { renderStaticGrid } from "./render";

const ALGORITHMS = ["backtracking", "heuristic"];

export class SolverController {
  private readonly inputEl: HTMLTextAreaElement;
  private readonly submitEl: HTMLButtonElement;
  private readonly messageEl: HTMLElement;
  private readonly panelsEl: HTMLElement;
  private readonly noticeEl: HTMLElement;
  private inFlight = false;

  constructor(
    root: HTMLElement,
    private readonly api: SudokuApi,
  ) {
    this.inputEl = root.querySelector("#solver-input")!;
    this.submitEl = root.querySelector("#solver-submit")!;
    this.messageEl = root.querySelector("#solver-message")!;
    this.panelsEl = root.querySelector("#solver-panels")!;
    this.noticeEl = root.querySelector("#solver-notice")!;
    this.inputEl.addEventListener("input", () => this.validateInput());
    this.submitEl.addEventListener("click", () => {
      void this.solve();
    });
    this.validateInput();
  }

  /** Client-side gate: 81 cells and no rule conflicts before any request. */
  validateInput(): number[] | null {
    const text = this.inputEl.value;
    if (text.trim() === "") {
      this.messageEl.textContent = "";
      this.submitEl.disabled = true;
      return null;
    }
    const cells = parseGridText(text);
    if (!cells) {
      this.messageEl.textContent =
        "A puzzle is 81 characters, digits or '.' for empty cells.";
      this.submitEl.disabled = true;
      return null;
    }
    if (!isConsistent(cells)) {
      this.messageEl.textContent =
        "This grid already breaks a row, column, or box constraint.";
      this.submitEl.disabled = true;
      return null;
    }
    this.messageEl.textContent = "";
    this.submitEl.disabled = this.inFlight;
    return cells;
  }

  async solve(): Promise<void> {
    const cells = this.validateInput();
    if (!cells || this.inFlight) return;
    this.inFlight = true;
    this.submitEl.disabled = true;
    this.panelsEl.textContent = "";
    this.noticeEl.textContent = "";
    try {
      const resp = await this.api.solve(serializeGrid(cells), ALGORITHMS);
      this.renderPanels(resp.results);
    } catch (err) {
      this.messageEl.textContent = `Solve failed: ${err}`;
    } finally {
      this.inFlight = false;
      this.validateInput();
    }
  }

  renderPanels(results: AlgorithmResult[]): void {
    this.panelsEl.textContent = "";
    for (const result of results) {
      const panel = document.createElement("div");
      panel.className = "panel";
      panel.dataset.algorithm = result.algorithm;

      const title = document.createElement("h3");
      title.textContent = result.algorithm;
      panel.appendChild(title);

      if (result.solved && result.solution) {
        const grid = document.createElement("div");
        renderStaticGrid(grid, result.solution);
        grid.dataset.solution = result.solution;
        panel.appendChild(grid);
      } else {
        const failed = document.createElement("p");
        failed.className = "no-solution";
        failed.textContent = result.error ?? "No solution";
        panel.appendChild(failed);
      }

      const stats = document.createElement("dl");
      stats.className = "stats";
      const entries: [string, string][] = [
        ["time", `${result.elapsed_ms} ms`],
        ["nodes", String(result.nodes)],
        ["backtracks", String(result.backtracks)],
      ];
      for (const [label, value] of entries) {
        const dt = document.createElement("dt");
        dt.textContent = label;
        const dd = document.createElement("dd");
        dd.dataset.stat = label;
        dd.textContent = value;
        stats.appendChild(dt);
        stats.appendChild(dd);
      }
      panel.appendChild(stats);
      this.panelsEl.appendChild(panel);
    }

    const solutions = results
      .filter((r) => r.solved && r.solution)
      .map((r) => r.solution);
    if (solutions.length > 1 && new Set(solutions).size > 1) {
      this.noticeEl.textContent =
        "The solvers found different valid solutions — this puzzle has " +
        "more than one.";
    }
  }
}
