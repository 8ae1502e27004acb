// Play view: fetch a generated board, let the human fill it with live
// conflict highlighting, detect completion. All rule checking mirrors
// the server's validity rule; no solving happens client-side.

import { SudokuApi } from "./api";
import {
  BoardState,
  boardComplete,
  boardConflicts,
  clearCell,
  enterDigit,
  moveSelection,
  newBoard,
  selectCell,
} from "./board";
import { buildBoard, updateBoard } from "./render";

export class PlayController {
  state: BoardState | null = null;
  private cellEls: HTMLElement[] = [];
  private readonly boardEl: HTMLElement;
  private readonly statusEl: HTMLElement;
  private readonly difficultyEl: HTMLSelectElement;
  private readonly seedEl: HTMLInputElement;
  private readonly errorEl: HTMLElement;

  constructor(
    root: HTMLElement,
    private readonly api: SudokuApi,
  ) {
    this.boardEl = root.querySelector("#play-board")!;
    this.statusEl = root.querySelector("#play-status")!;
    this.difficultyEl = root.querySelector("#play-difficulty")!;
    this.seedEl = root.querySelector("#play-seed")!;
    this.errorEl = root.querySelector("#play-error")!;
    root.querySelector("#play-new")!.addEventListener("click", () => {
      void this.newGame();
    });
    this.boardEl.tabIndex = 0;
    this.boardEl.addEventListener("keydown", (e) => this.handleKey(e as KeyboardEvent));
  }

  async newGame(): Promise<void> {
    this.errorEl.textContent = "";
    const difficulty = this.difficultyEl.value;
    const seedText = this.seedEl.value.trim();
    const seed = seedText === "" ? undefined : Number(seedText);
    try {
      const resp = await this.api.generate(difficulty, seed);
      this.state = newBoard(resp.puzzle, resp.difficulty, resp.seed);
      this.seedEl.value = String(resp.seed);
      this.cellEls = buildBoard(this.boardEl, (idx) => {
        if (this.state) {
          selectCell(this.state, idx);
          this.refresh();
        }
      });
      this.boardEl.classList.remove("complete");
      this.refresh();
      this.boardEl.focus();
    } catch (err) {
      this.state = null;
      this.errorEl.textContent = `Could not reach the puzzle service: ${err}`;
      this.boardEl.classList.add("disabled");
    }
  }

  handleKey(event: KeyboardEvent): void {
    if (!this.state) return;
    const key = event.key;
    if (key === "ArrowUp") moveSelection(this.state, -1, 0);
    else if (key === "ArrowDown") moveSelection(this.state, 1, 0);
    else if (key === "ArrowLeft") moveSelection(this.state, 0, -1);
    else if (key === "ArrowRight") moveSelection(this.state, 0, 1);
    else if (key >= "1" && key <= "9") enterDigit(this.state, Number(key));
    else if (key === "0" || key === "Backspace" || key === "Delete")
      clearCell(this.state);
    else return;
    event.preventDefault();
    this.refresh();
  }

  refresh(): void {
    if (!this.state) return;
    const flags = boardConflicts(this.state);
    updateBoard(
      this.cellEls,
      this.state.cells.map((value, idx) => ({
        value,
        given: this.state!.given[idx],
        selected: idx === this.state!.selected,
        conflict: flags[idx],
      })),
    );
    const conflicts = flags.filter(Boolean).length;
    if (boardComplete(this.state)) {
      this.statusEl.textContent = "Solved — congratulations!";
      this.boardEl.classList.add("complete");
    } else if (conflicts > 0) {
      this.statusEl.textContent = `${conflicts} conflicting cells`;
      this.boardEl.classList.remove("complete");
    } else {
      const empty = this.state.cells.filter((v) => v === 0).length;
      this.statusEl.textContent = `${empty} cells to go`;
      this.boardEl.classList.remove("complete");
    }
  }
}
