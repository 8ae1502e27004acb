// Pure grid logic shared by both views. The conflict rule mirrors the
// server's validity check exactly (same row, column, or 3x3 box); the
// UI never computes solutions locally.

export const SIZE = 9;
export const CELLS = 81;

function buildPeers(): number[][] {
  const peers: number[][] = [];
  for (let idx = 0; idx < CELLS; idx++) {
    const row = Math.floor(idx / 9);
    const col = idx % 9;
    const set = new Set<number>();
    for (let c = 0; c < 9; c++) if (c !== col) set.add(row * 9 + c);
    for (let r = 0; r < 9; r++) if (r !== row) set.add(r * 9 + col);
    const br = 3 * Math.floor(row / 3);
    const bc = 3 * Math.floor(col / 3);
    for (let r = br; r < br + 3; r++) {
      for (let c = bc; c < bc + 3; c++) {
        const p = r * 9 + c;
        if (p !== idx) set.add(p);
      }
    }
    peers.push([...set]);
  }
  return peers;
}

// 20 peers per cell: 8 row + 8 column + 4 remaining box cells.
export const PEERS: readonly number[][] = buildPeers();

/** Parse an 81-character grid line ('.' or '0' = empty, whitespace
 * ignored). Returns null when the text is not a grid. */
export function parseGridText(text: string): number[] | null {
  const compact = text.replace(/\s+/g, "");
  if (compact.length !== CELLS) return null;
  const cells: number[] = [];
  for (const ch of compact) {
    if (ch === ".") {
      cells.push(0);
    } else if (ch >= "0" && ch <= "9") {
      cells.push(ch.charCodeAt(0) - 48);
    } else {
      return null;
    }
  }
  return cells;
}

export function serializeGrid(cells: readonly number[]): string {
  return cells.map(String).join("");
}

/** Would placing `digit` at `idx` break a row/column/box constraint? */
export function entryConflicts(
  cells: readonly number[],
  idx: number,
  digit: number,
): boolean {
  return PEERS[idx].some((p) => cells[p] === digit);
}

/** Per-cell conflict flags: a filled cell is flagged when any peer
 * holds the same digit. Recomputed from scratch after every entry. */
export function conflictFlags(cells: readonly number[]): boolean[] {
  return cells.map(
    (v, idx) => v !== 0 && PEERS[idx].some((p) => cells[p] === v),
  );
}

export function isConsistent(cells: readonly number[]): boolean {
  return !conflictFlags(cells).some(Boolean);
}

/** Full board with no conflicts. */
export function isComplete(cells: readonly number[]): boolean {
  return cells.every((v) => v !== 0) && isConsistent(cells);
}
