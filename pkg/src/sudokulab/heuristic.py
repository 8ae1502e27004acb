"""Heuristic solver: candidate propagation with most-constrained-cell
selection, optional value shuffling or least-constraining-value
ordering, and backtracking on dead ends.

The candidate map tracks, for every empty cell, the digits its row,
column, and box still allow. Placing a digit removes the cell from the
map and strips the digit from the candidate sets of the cell's 20
peers, so the sets stay exact throughout the search and only shrink on
the way down.

By default the candidate state is copied at every placement (the
behavior benchmarked against the baseline); an in-place trail/undo
variant behind ``copy_per_node=False`` visits the identical search tree
with different constant factors and is excluded from benchmark runs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Set, Tuple

import numpy as np

from . import backend
from .board import CellRef, Grid, as_grid, is_consistent
from .errors import DeadEndError, InconsistentGridError
from .outcome import NO_SOLUTION, SolveOutcome
from .rng import fold_seed

CandidateMap = Dict[CellRef, Set[int]]

#: kernel helpers shared by the instrumented search (always interpreted)
_K = backend.pure_kernels

VALUE_ORDERINGS = ("natural", "shuffled", "lcv")

_ORDER_CODES = {
    "natural": _K.ORDER_NATURAL,
    "shuffled": _K.ORDER_SHUFFLED,
    "lcv": _K.ORDER_LCV,
}

#: Hook signature: called on entry to every search node with a snapshot
#: of the board and candidate map (root call included, so a successful
#: solve fires it nodes + 1 times).
NodeHook = Callable[[Grid, CandidateMap], None]


@dataclass(frozen=True)
class HeuristicOptions:
    """Value-ordering policy for the heuristic search.

    randomize_values mirrors the useRandomization switch of the search
    loop and is equivalent to value_ordering="shuffled"; shuffled mode
    requires a seed. lcv orders a cell's candidates by how few peer
    candidates they would eliminate. natural (the default) tries digits
    ascending.
    """

    randomize_values: bool = False
    value_ordering: str = "natural"
    seed: Optional[int] = None
    copy_per_node: bool = True

    def __post_init__(self):
        if self.value_ordering not in VALUE_ORDERINGS:
            raise ValueError(
                f"value_ordering must be one of {VALUE_ORDERINGS}, "
                f"got {self.value_ordering!r}"
            )
        if self.randomize_values:
            if self.value_ordering == "lcv":
                raise ValueError("randomize_values and lcv ordering are exclusive")
            object.__setattr__(self, "value_ordering", "shuffled")
        if self.value_ordering == "shuffled":
            object.__setattr__(self, "randomize_values", True)
            if self.seed is None:
                raise ValueError("shuffled ordering requires a seed")


@dataclass(frozen=True)
class CostBreakdown:
    """State-cost estimate f = g + h: g counts cells already filled,
    h sums 1/|candidates| over the empty cells."""

    g: float
    h: float
    f: float


def get_affected_cells(cell) -> Set[CellRef]:
    """The 20 peers of `cell`: 8 in its row, 8 in its column, and the 4
    box cells not already counted. Never contains `cell` itself."""
    row, col = cell
    if not (0 <= row < 9 and 0 <= col < 9):
        raise ValueError(f"cell {cell!r} out of range")
    idx = row * 9 + col
    return {CellRef(p // 9, p % 9) for p in _K.PEERS[idx]}


def initialize_possibilities(grid) -> CandidateMap:
    """Map each empty cell to the digits its 20 peers leave legal.

    Filled cells do not appear. Raises InconsistentGridError when the
    grid already violates a row/column/box constraint.
    """
    g = as_grid(grid)
    if not is_consistent(g):
        raise InconsistentGridError("grid has conflicting clues")
    masks = np.zeros(81, dtype=np.int64)
    active = np.zeros(81, dtype=np.int64)
    n = backend.kernels.init_candidates(g.ravel(), masks, active)
    return _masks_to_map(masks, active, n)


def _masks_to_map(masks, active, n_active) -> CandidateMap:
    cmap: CandidateMap = {}
    for t in range(n_active):
        i = int(active[t])
        m = int(masks[i])
        cmap[CellRef(i // 9, i % 9)] = {d for d in range(1, 10) if m & (1 << d)}
    return cmap


def find_most_constrained_cell(
    cmap: CandidateMap,
) -> Optional[Tuple[CellRef, List[int]]]:
    """The map key with the fewest candidates, ties broken row-major;
    None when the map is empty (the solved signal). The candidate list
    comes back in ascending digit order."""
    best_cell = None
    best_size = 10
    for (row, col), values in cmap.items():
        size = len(values)
        if size < best_size or (
            size == best_size and (row, col) < (best_cell.row, best_cell.col)
        ):
            best_cell = CellRef(row, col)
            best_size = size
    if best_cell is None:
        return None
    return best_cell, sorted(cmap[best_cell])


def order_values_lcv(grid, cell, values, cmap: CandidateMap) -> List[int]:
    """Sort `values` ascending by how many of the cell's empty peers
    still hold the value as a candidate; ties by ascending digit."""
    row, col = cell
    peers = get_affected_cells(cell)
    candidates = cmap.get(CellRef(row, col), set())
    if not set(values) <= candidates:
        raise ValueError("values must be candidates of the given cell")

    def eliminations(v: int) -> int:
        return sum(1 for p in peers if p in cmap and v in cmap[p])

    return sorted(values, key=lambda v: (eliminations(v), v))


def cost_f(grid, cmap: CandidateMap) -> CostBreakdown:
    """Evaluate f = g + h for a search state.

    g is the count of filled cells (81 minus the map size); h sums
    1/|candidates| over map entries. An empty candidate set means the
    state is contradicted and h is undefined: DeadEndError.
    """
    g_arr = as_grid(grid)
    empty = {CellRef(r, c) for r in range(9) for c in range(9) if g_arr[r, c] == 0}
    if set(cmap) != empty:
        raise ValueError("candidate map keys must be exactly the grid's empty cells")
    for cell, values in cmap.items():
        if not values:
            raise DeadEndError(f"empty candidate set at {tuple(cell)}")
    g = float(81 - len(cmap))
    # exact rational sum, so analytic states (e.g. 81 ninths) come out
    # as the exact float before rounding error can accumulate
    h = float(sum(Fraction(1, len(values)) for values in cmap.values()))
    return CostBreakdown(g=g, h=h, f=g + h)


def solve_heuristic(
    puzzle,
    opts: Optional[HeuristicOptions] = None,
    on_node: Optional[NodeHook] = None,
) -> SolveOutcome:
    """Solve `puzzle` with candidate propagation and MRV selection.

    Never mutates the input. Deterministic for natural and lcv
    orderings, and for shuffled ordering under a fixed seed. When
    `on_node` is given the search runs through the instrumented
    interpreted path (identical search tree, slower) and calls the hook
    at every node entry.
    """
    opts = opts or HeuristicOptions()
    g = as_grid(puzzle)
    if not is_consistent(g):
        raise InconsistentGridError("puzzle has conflicting clues")
    ordering = _ORDER_CODES[opts.value_ordering]
    state = fold_seed(opts.seed) if opts.value_ordering == "shuffled" else 1
    use_trail = not opts.copy_per_node

    if on_node is None:
        k = backend.kernels
        work = backend.adapt_board(k, g.ravel().copy())
        masks, active = backend.new_candidate_state(k)
        counters = backend.new_counters(k)
        t0 = time.perf_counter_ns()
        n = k.init_candidates(work, masks, active)
        solved, _ = k.heuristic_search(
            work, masks, active, n, ordering, state, counters, use_trail
        )
        elapsed = time.perf_counter_ns() - t0
    else:
        work = g.ravel().copy()
        masks = np.zeros(81, dtype=np.int64)
        active = np.zeros(81, dtype=np.int64)
        counters = np.zeros(2, dtype=np.int64)
        t0 = time.perf_counter_ns()
        n = _K.init_candidates(work, masks, active)
        solved = _search_instrumented(
            work, masks, active, n, ordering, [state], counters, use_trail, on_node
        )
        elapsed = time.perf_counter_ns() - t0

    return SolveOutcome(
        solved=bool(solved),
        solution=np.asarray(work, dtype=np.int8).reshape(9, 9) if solved else None,
        elapsed_ns=elapsed,
        nodes=int(counters[0]),
        backtracks=int(counters[1]),
        error=None if solved else NO_SOLUTION,
    )


def _search_instrumented(
    cells, masks, active, n_active, ordering, state_box, counters, use_trail, on_node
) -> bool:
    """Line-for-line mirror of the kernel search that additionally fires
    `on_node` at every node entry. Kept interpreted so the hook can be
    an arbitrary Python callable; parity with the kernel is pinned by
    tests."""
    on_node(cells.reshape(9, 9).copy(), _masks_to_map(masks, active, n_active))
    if n_active == 0:
        return True
    best = -1
    best_pos = -1
    best_size = 10
    for t in range(n_active):
        i = int(active[t])
        s = _K.POPCOUNT[masks[i]]
        if s < best_size:
            best_size = s
            best = i
            best_pos = t
    row, col = divmod(best, 9)
    values = np.empty(9, dtype=np.int64)
    nv = 0
    m = int(masks[best])
    for d in range(1, 10):
        if m & (1 << d):
            values[nv] = d
            nv += 1
    if ordering == _K.ORDER_SHUFFLED:
        state_box[0] = _K.shuffle_prefix(values, nv, state_box[0])
    elif ordering == _K.ORDER_LCV:
        _K.lcv_sort(values, nv, masks, best)
    for t in range(nv):
        num = int(values[t])
        if _K.valid_move(cells, row, col, num):
            cells[best] = num
            counters[0] += 1
            bit = 1 << num
            if use_trail:
                saved_mask = int(masks[best])
                masks[best] = 0
                for q in range(best_pos, n_active - 1):
                    active[q] = active[q + 1]
                removed = []
                for p in _K.PEERS[best]:
                    if masks[p] & bit:
                        masks[p] &= ~bit
                        removed.append(p)
                solved = _search_instrumented(
                    cells, masks, active, n_active - 1, ordering, state_box,
                    counters, use_trail, on_node,
                )
                if solved:
                    return True
                for p in removed:
                    masks[p] |= bit
                for q in range(n_active - 1, best_pos, -1):
                    active[q] = active[q - 1]
                active[best_pos] = best
                masks[best] = saved_mask
            else:
                new_masks = masks.copy()
                new_active = active.copy()
                new_masks[best] = 0
                for q in range(best_pos, n_active - 1):
                    new_active[q] = new_active[q + 1]
                for p in _K.PEERS[best]:
                    new_masks[p] &= ~bit
                solved = _search_instrumented(
                    cells, new_masks, new_active, n_active - 1, ordering,
                    state_box, counters, use_trail, on_node,
                )
                if solved:
                    return True
            cells[best] = 0
            counters[1] += 1
    return False
