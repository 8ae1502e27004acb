"""Result type shared by both solvers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .board import Grid, as_grid, is_complete

NO_SOLUTION = "No solution"


@dataclass(frozen=True)
class SolveOutcome:
    """What a solve call produced and what it cost.

    elapsed_ns covers the solve call only (search plus its candidate
    initialization), measured on a monotonic clock; parsing, input
    validation, and output formatting are excluded. nodes counts digit
    placements attempted, backtracks counts placements undone.
    """

    solved: bool
    solution: Optional[Grid]
    elapsed_ns: int
    nodes: int
    backtracks: int
    error: Optional[str] = None

    @property
    def elapsed_ms(self) -> float:
        return self.elapsed_ns / 1e6

    def __post_init__(self):
        if self.solved:
            assert self.solution is not None
        else:
            assert self.solution is None
        assert self.backtracks <= self.nodes


def check_solution(puzzle, outcome: SolveOutcome) -> bool:
    """True iff the outcome's solution is full, consistent, and embeds
    every clue of `puzzle`."""
    if not outcome.solved or outcome.solution is None:
        return False
    p = as_grid(puzzle)
    s = as_grid(outcome.solution)
    if not is_complete(s):
        return False
    mask = p > 0
    return bool((s[mask] == p[mask]).all())
