"""Board representation, rule checks, text format, and the counting oracle.

A grid is a 9x9 numpy int8 array, 0 marking an empty cell. All public
functions also accept nested sequences (lists of lists) and normalize
them with :func:`as_grid`.

The text format is one 81-character line, row-major, with '0' or '.'
for empty cells; it is the interchange format used by the CLI, dataset
files, and the HTTP API.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from . import backend
from .errors import GridFormatError, InconsistentGridError

Grid = np.ndarray

GRID_SIZE = 9
N_CELLS = 81


class CellRef(NamedTuple):
    """A (row, col) cell coordinate; interchangeable with a plain tuple."""

    row: int
    col: int

    def box_anchor(self) -> "CellRef":
        """Top-left cell of this cell's 3x3 box."""
        return CellRef(3 * (self.row // 3), 3 * (self.col // 3))


@dataclass(frozen=True)
class Difficulty:
    """A named difficulty level defined purely by its clue count."""

    name: str
    clues: int

    MIN_CLUES = 17
    MAX_CLUES = 80

    def __post_init__(self):
        if not (self.MIN_CLUES <= self.clues <= self.MAX_CLUES):
            raise ValueError(
                f"clue count must be in [{self.MIN_CLUES}, {self.MAX_CLUES}], "
                f"got {self.clues}"
            )

    @classmethod
    def from_name(cls, name: str) -> "Difficulty":
        """Look up a standard level by name. 'extreme' is accepted as an
        alias for expert."""
        key = name.strip().lower()
        if key == "extreme":
            key = "expert"
        try:
            return LEVELS[key]
        except KeyError:
            raise ValueError(
                f"unknown difficulty {name!r}; expected one of {', '.join(LEVELS)}"
            ) from None


BEGINNER = Difficulty("beginner", 50)
EASY = Difficulty("easy", 40)
MEDIUM = Difficulty("medium", 35)
HARD = Difficulty("hard", 27)
EXPERT = Difficulty("expert", 20)

#: The five standard levels, easiest first.
LEVELS = {
    d.name: d for d in (BEGINNER, EASY, MEDIUM, HARD, EXPERT)
}


def as_grid(obj) -> Grid:
    """Normalize `obj` to a (9, 9) int8 array, validating cell values.

    Accepts numpy arrays and nested sequences. Returns the input array
    unchanged when it is already a contiguous int8 grid; otherwise
    returns a converted copy.
    """
    if isinstance(obj, np.ndarray) and obj.dtype == np.int8 and obj.shape == (9, 9):
        if obj.flags.c_contiguous:
            return obj
        return np.ascontiguousarray(obj)
    try:
        arr = np.asarray(obj)
    except Exception as exc:
        raise GridFormatError(f"cannot interpret input as a grid: {exc}") from exc
    if arr.shape != (GRID_SIZE, GRID_SIZE):
        raise GridFormatError(f"grid must be 9x9, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise GridFormatError(f"grid cells must be integers, got dtype {arr.dtype}")
    if arr.min() < 0 or arr.max() > 9:
        raise GridFormatError("grid cells must be in 0..9")
    return arr.astype(np.int8)


def empty_grid() -> Grid:
    """A fresh all-empty grid."""
    return np.zeros((GRID_SIZE, GRID_SIZE), dtype=np.int8)


def parse_grid(text: str) -> Grid:
    """Parse an 81-character line into a grid.

    Whitespace is stripped; '.' and '0' both mean empty. Inverse of
    :func:`serialize_grid`.
    """
    compact = "".join(text.split())
    if len(compact) != N_CELLS:
        raise GridFormatError(
            f"expected 81 characters after stripping whitespace, got {len(compact)}"
        )
    cells = np.empty(N_CELLS, dtype=np.int8)
    for i, ch in enumerate(compact):
        if ch == ".":
            cells[i] = 0
        elif "0" <= ch <= "9":
            cells[i] = ord(ch) - ord("0")
        else:
            raise GridFormatError(f"illegal character {ch!r} at position {i}")
    return cells.reshape(GRID_SIZE, GRID_SIZE)


def serialize_grid(grid) -> str:
    """Render a grid as its 81-character line ('0' for empty)."""
    cells = as_grid(grid).ravel()
    return "".join(chr(ord("0") + int(v)) for v in cells)


def is_valid_move(grid, cell, num: int) -> bool:
    """True iff `num` appears nowhere in the cell's row, column, or box.

    The cell's own current value is not special-cased: the check asks
    whether placing `num` on an empty cell would conflict. The grid is
    never modified.
    """
    row, col = cell
    if not (0 <= row < 9 and 0 <= col < 9):
        raise ValueError(f"cell {cell!r} out of range")
    if not (1 <= num <= 9):
        raise ValueError(f"num must be 1..9, got {num}")
    cells = as_grid(grid).ravel()
    return bool(backend.kernels.valid_move(cells, row, col, num))


def find_empty(grid) -> Optional[CellRef]:
    """First empty cell in row-major scan order, or None if full."""
    cells = as_grid(grid).ravel()
    idx = int(backend.kernels.first_empty(cells, 0))
    if idx < 0:
        return None
    return CellRef(idx // 9, idx % 9)


def is_consistent(grid) -> bool:
    """True iff no digit 1-9 repeats within any row, column, or box."""
    g = as_grid(grid)
    for r in range(9):
        if _has_duplicate(g[r, :]):
            return False
    for c in range(9):
        if _has_duplicate(g[:, c]):
            return False
    for br in range(0, 9, 3):
        for bc in range(0, 9, 3):
            if _has_duplicate(g[br : br + 3, bc : bc + 3].ravel()):
                return False
    return True


def _has_duplicate(unit) -> bool:
    vals = unit[unit > 0]
    return len(np.unique(vals)) != len(vals)


def is_complete(grid) -> bool:
    """True iff the grid is full and consistent."""
    g = as_grid(grid)
    return bool((g > 0).all()) and is_consistent(g)


def count_solutions(grid, cap: int) -> int:
    """Number of distinct completions of `grid`, counting stops at `cap`.

    Exhaustive depth-first enumeration over per-unit digit bitmasks;
    deliberately independent of both solvers so it can vouch for them.
    Returns min(true count, cap).
    """
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    g = as_grid(grid)
    if not is_consistent(g):
        raise InconsistentGridError("cannot count solutions of an inconsistent grid")
    k = backend.kernels
    cells = backend.adapt_board(k, g.ravel().copy())
    return int(k.count_completions(cells, cap))
