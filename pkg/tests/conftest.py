"""Shared fixtures: reference puzzles and seeded random-grid helpers."""

import numpy as np
import pytest

import sudokulab as sl

# Classic newspaper puzzle; uniqueness is re-certified by the counting
# oracle in the tests that rely on it.
CLASSIC_PUZZLE = (
    "530070000600195000098000060800060003"
    "400803001700020006060000280000419005000080079"
)
CLASSIC_SOLUTION = (
    "534678912672195348198342567859761423"
    "426853791713924856961537284287419635345286179"
)

# Generated pairs whose puzzles the oracle certifies as single-solution
# (blind cell removal keeps uniqueness only at generous clue counts).
UNIQUE_MEDIUM_SEED = 2
UNIQUE_EASY_SEED = 2


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    sl.warm_up()


@pytest.fixture
def classic_puzzle():
    return sl.parse_grid(CLASSIC_PUZZLE)


@pytest.fixture
def classic_solution():
    return sl.parse_grid(CLASSIC_SOLUTION)


def make_unsolvable_grid():
    """Consistent grid with no completion: row 0 holds 1..8, and the 9
    needed at (0, 8) is blocked by a 9 elsewhere in that column/box."""
    g = sl.empty_grid()
    for c in range(8):
        g[0, c] = c + 1
    g[2, 8] = 9
    return g


def random_consistent_grid(rng: np.random.Generator, max_fill: int = 45):
    """Random consistent partial grid: up to max_fill cells placed, each
    drawn uniformly from the currently-legal digits of a random empty
    cell. May or may not be solvable."""
    g = sl.empty_grid()
    n = int(rng.integers(0, max_fill + 1))
    for _ in range(n):
        row = int(rng.integers(0, 9))
        col = int(rng.integers(0, 9))
        if g[row, col] != 0:
            continue
        legal = [d for d in range(1, 10) if sl.is_valid_move(g, (row, col), d)]
        if legal:
            g[row, col] = legal[int(rng.integers(0, len(legal)))]
    return g


def brute_force_candidates(grid, cell):
    """Independent candidate computation: digits absent from the cell's
    row, column, and box."""
    g = sl.as_grid(grid)
    row, col = cell
    used = set(int(v) for v in g[row, :]) | set(int(v) for v in g[:, col])
    br, bc = 3 * (row // 3), 3 * (col // 3)
    used |= set(int(v) for v in g[br : br + 3, bc : bc + 3].ravel())
    return set(range(1, 10)) - used
