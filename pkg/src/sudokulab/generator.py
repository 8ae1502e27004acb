"""Difficulty-parameterized puzzle generation.

A puzzle is built in three steps sharing one RNG stream, consumed in a
fixed order so (difficulty, seed) pins the result bit-for-bit:

1. fill the three diagonal 3x3 boxes (anchors 0, 3, 6) with independent
   shuffles of 1..9 — one shuffle per box, values placed row-major;
2. complete the board with randomized backtracking (a fresh shuffle of
   the digits at every search node);
3. shuffle the list of all 81 cells and blank the first 81 - clues of
   them.

Solution uniqueness is deliberately NOT enforced: removal is blind, so
low-clue puzzles may admit several completions. Callers that need a
unique puzzle can filter with board.count_solutions(puzzle, 2) == 1.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend
from .board import Difficulty, Grid, as_grid, empty_grid, is_consistent
from .errors import InconsistentGridError
from .rng import Xorshift32


@dataclass(frozen=True)
class PuzzlePair:
    """A generated puzzle, the solution it was carved from, and its recipe."""

    puzzle: Grid
    solution: Grid
    difficulty: Difficulty
    seed: int


def solve_randomized(grid: np.ndarray, rng: Xorshift32) -> bool:
    """Complete `grid` in place, trying digits in shuffled order per cell.

    Returns True and leaves `grid` fully filled on success; returns
    False and leaves `grid` exactly as passed when no completion exists.
    Consumes draws from `rng` either way.
    """
    if not isinstance(grid, np.ndarray):
        raise TypeError("in-place completion requires a numpy array grid")
    g = as_grid(grid)
    if not is_consistent(g):
        raise InconsistentGridError("cannot complete an inconsistent grid")
    k = backend.kernels
    work = backend.adapt_board(k, g.ravel().copy())
    ok, state = k.randomized_fill(work, 0, rng.state)
    rng.state = int(state)
    if ok:
        np.copyto(grid, np.asarray(work, dtype=np.int8).reshape(9, 9),
                  casting="same_kind")
    return bool(ok)


def fill_diagonal_boxes(grid: np.ndarray, rng: Xorshift32) -> None:
    """Place an independent shuffle of 1..9 into each diagonal box."""
    if not isinstance(grid, np.ndarray):
        raise TypeError("in-place fill requires a numpy array grid")
    for anchor in (0, 3, 6):
        nums = list(range(1, 10))
        rng.shuffle(nums)
        for j in range(3):
            for k in range(3):
                grid[anchor + j, anchor + k] = nums[j * 3 + k]


def generate(difficulty: Difficulty, seed: int) -> PuzzlePair:
    """Produce a (puzzle, solution) pair with exactly `difficulty.clues`
    filled cells. Deterministic given (difficulty, seed)."""
    rng = Xorshift32(seed)
    grid = empty_grid()
    fill_diagonal_boxes(grid, rng)
    # The three diagonal boxes share no row, column, or box, so a
    # completion always exists and this cannot fail.
    solved = solve_randomized(grid, rng)
    assert solved, "diagonal-box prefill is always completable"
    solution = grid.copy()
    cells = list(range(81))
    rng.shuffle(cells)
    flat = grid.ravel()
    for idx in cells[: 81 - difficulty.clues]:
        flat[idx] = 0
    return PuzzlePair(puzzle=grid, solution=solution, difficulty=difficulty, seed=seed)
