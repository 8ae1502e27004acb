"""Baseline solver: deterministic recursive backtracking.

Scans cells row-major, tries digits 1..9 ascending at each empty cell,
recurses on a valid placement, resets the cell to 0 when the subtree
fails. Kept deliberately naive — no propagation, no ordering, no early
contradiction detection — because it is the benchmark baseline.

The kernel resumes its scan from the first cell after the last
placement instead of rescanning from (0,0) at every level; the visited
search tree (and so the node and backtrack counts) is identical.
"""

from __future__ import annotations

import time

import numpy as np

from . import backend
from .board import as_grid, is_consistent
from .errors import InconsistentGridError
from .outcome import NO_SOLUTION, SolveOutcome


def solve_backtracking(puzzle) -> SolveOutcome:
    """Solve `puzzle`, never mutating it. Deterministic: identical input
    gives an identical solution, node count, and backtrack count."""
    g = as_grid(puzzle)
    if not is_consistent(g):
        raise InconsistentGridError("puzzle has conflicting clues")
    k = backend.kernels
    work = backend.adapt_board(k, g.ravel().copy())
    counters = backend.new_counters(k)
    t0 = time.perf_counter_ns()
    solved = k.backtrack_search(work, 0, counters)
    elapsed = time.perf_counter_ns() - t0
    return SolveOutcome(
        solved=bool(solved),
        solution=np.asarray(work, dtype=np.int8).reshape(9, 9) if solved else None,
        elapsed_ns=elapsed,
        nodes=int(counters[0]),
        backtracks=int(counters[1]),
        error=None if solved else NO_SOLUTION,
    )
