// Play-mode board state: given cells are immutable, user entries are
// free, selection moves with the arrow keys. Pure state transitions;
// the DOM layer just renders the result.

import { CELLS, conflictFlags, isComplete, parseGridText } from "./grid";

export interface BoardState {
  cells: number[];
  given: boolean[];
  selected: number;
  difficulty: string;
  seed: number;
}

export function newBoard(
  puzzleText: string,
  difficulty: string,
  seed: number,
): BoardState {
  const cells = parseGridText(puzzleText);
  if (!cells) throw new Error("generator returned a malformed grid");
  return {
    cells,
    given: cells.map((v) => v !== 0),
    selected: cells.findIndex((v) => v === 0),
    difficulty,
    seed,
  };
}

export function moveSelection(state: BoardState, dRow: number, dCol: number): void {
  const row = Math.floor(state.selected / 9) + dRow;
  const col = (state.selected % 9) + dCol;
  const clamp = (x: number) => Math.max(0, Math.min(8, x));
  state.selected = clamp(row) * 9 + clamp(col);
}

export function selectCell(state: BoardState, idx: number): void {
  if (idx >= 0 && idx < CELLS) state.selected = idx;
}

/** Returns false when the selected cell is a given (immutable). */
export function enterDigit(state: BoardState, digit: number): boolean {
  if (state.given[state.selected]) return false;
  state.cells[state.selected] = digit;
  return true;
}

export function clearCell(state: BoardState): boolean {
  return enterDigit(state, 0);
}

export function boardConflicts(state: BoardState): boolean[] {
  return conflictFlags(state.cells);
}

export function boardComplete(state: BoardState): boolean {
  return isComplete(state.cells);
}
