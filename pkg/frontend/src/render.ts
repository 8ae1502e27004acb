// Minimal DOM helpers for 9x9 boards.

export interface CellView {
  value: number;
  given?: boolean;
  selected?: boolean;
  conflict?: boolean;
}

/** Build the 81 cell elements once; returns them for later updates. */
export function buildBoard(
  container: HTMLElement,
  onCellClick?: (idx: number) => void,
): HTMLElement[] {
  container.textContent = "";
  container.classList.add("board");
  const cells: HTMLElement[] = [];
  for (let idx = 0; idx < 81; idx++) {
    const cell = document.createElement("div");
    cell.className = "cell";
    cell.dataset.idx = String(idx);
    const row = Math.floor(idx / 9);
    const col = idx % 9;
    if (row % 3 === 0) cell.classList.add("box-top");
    if (col % 3 === 0) cell.classList.add("box-left");
    if (row === 8) cell.classList.add("box-bottom");
    if (col === 8) cell.classList.add("box-right");
    if (onCellClick) cell.addEventListener("click", () => onCellClick(idx));
    container.appendChild(cell);
    cells.push(cell);
  }
  return cells;
}

export function updateBoard(cells: HTMLElement[], views: CellView[]): void {
  views.forEach((view, idx) => {
    const cell = cells[idx];
    cell.textContent = view.value === 0 ? "" : String(view.value);
    cell.classList.toggle("given", !!view.given);
    cell.classList.toggle("selected", !!view.selected);
    cell.classList.toggle("conflict", !!view.conflict);
  });
}

/** Static mini-board used in the solver result panels. */
export function renderStaticGrid(container: HTMLElement, text: string): void {
  const cells = buildBoard(container);
  updateBoard(
    cells,
    [...text].map((ch) => ({ value: ch === "." ? 0 : Number(ch) })),
  );
}
