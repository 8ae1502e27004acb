import { SudokuApi } from "./api";
import { PlayController } from "./play";
import { ResultsController } from "./results";
import { SolverController } from "./solver";

export function initApp(root: Document | HTMLElement, api: SudokuApi) {
  const q = (sel: string) => root.querySelector<HTMLElement>(sel)!;

  const tabs = root.querySelectorAll<HTMLButtonElement>("#tabs button");
  tabs.forEach((button) => {
    button.addEventListener("click", () => {
      tabs.forEach((b) => b.classList.toggle("active", b === button));
      root.querySelectorAll(".tab").forEach((tab) => {
        tab.classList.toggle(
          "active",
          tab.id === `tab-${button.dataset.tab}`,
        );
      });
    });
  });

  return {
    play: new PlayController(q("#tab-play"), api),
    solver: new SolverController(q("#tab-solver"), api),
    results: new ResultsController(q("#tab-results")),
  };
}

// Only auto-boot in the real browser; tests build their own DOM.
if (typeof document !== "undefined" && document.getElementById("tabs")) {
  initApp(document, new SudokuApi(""));
}
