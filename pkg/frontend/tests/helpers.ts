// Shared DOM scaffold mirroring index.html's structure.

export const APP_HTML = `
  <nav id="tabs">
    <button data-tab="play" class="active">Play</button>
    <button data-tab="solver">Solver</button>
    <button data-tab="results">Results</button>
  </nav>
  <section id="tab-play" class="tab active">
    <select id="play-difficulty">
      <option value="beginner" selected>beginner</option>
      <option value="expert">expert</option>
    </select>
    <input id="play-seed" type="text" />
    <button id="play-new">New game</button>
    <p id="play-error"></p>
    <div id="play-board"></div>
    <p id="play-status"></p>
  </section>
  <section id="tab-solver" class="tab">
    <textarea id="solver-input"></textarea>
    <p id="solver-message"></p>
    <button id="solver-submit" disabled>Solve</button>
    <p id="solver-notice"></p>
    <div id="solver-panels"></div>
  </section>
  <section id="tab-results" class="tab">
    <input id="results-file" type="file" />
    <p id="results-message"></p>
    <div id="results-chart"></div>
  </section>
`;

export function mountApp(): HTMLElement {
  document.body.innerHTML = APP_HTML;
  return document.body;
}

export function pressKey(el: HTMLElement, key: string): void {
  el.dispatchEvent(new KeyboardEvent("keydown", { key, bubbles: true, cancelable: true }));
}

// A board with a single empty cell at (0, 0); entering 5 completes it.
export const NEARLY_DONE_PUZZLE =
  "034678912672195348198342567859761423426853791713924856961537284287419635345286179";
export const NEARLY_DONE_MISSING = 5;

export const CLASSIC_PUZZLE =
  "530070000600195000098000060800060003400803001700020006060000280000419005000080079";
export const CLASSIC_SOLUTION =
  "534678912672195348198342567859761423426853791713924856961537284287419635345286179";
