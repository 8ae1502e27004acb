"""Sudoku constraint-solving workbench.

Two solvers over one board representation — naive recursive
backtracking and candidate-propagation search with MRV/LCV value
ordering — plus a difficulty-parameterized puzzle generator, an
exhaustive solution-counting oracle, a benchmark harness that compares
the solvers per difficulty level, and an HTTP API for the web UI.

Hot search loops are numba-compiled when numba is installed; set
SUDOKULAB_BACKEND=numpy to force the interpreted fallback (see
sudokulab.backend). Results are bit-identical either way.
"""

from .backend import ACTIVE_BACKEND, warm_up
from .backtracker import solve_backtracking
from .bench import (
    BenchReport,
    BenchRow,
    DatasetRecord,
    SolverStats,
    build_dataset,
    derive_seed,
    emit_report,
    read_dataset,
    run_benchmark,
    speedup,
    write_dataset,
)
from .board import (
    BEGINNER,
    CellRef,
    Difficulty,
    EASY,
    EXPERT,
    Grid,
    HARD,
    LEVELS,
    MEDIUM,
    as_grid,
    count_solutions,
    empty_grid,
    find_empty,
    is_complete,
    is_consistent,
    is_valid_move,
    parse_grid,
    serialize_grid,
)
from .errors import (
    BenchmarkIntegrityError,
    DeadEndError,
    GridFormatError,
    InconsistentGridError,
    SudokuError,
)
from .generator import PuzzlePair, fill_diagonal_boxes, generate, solve_randomized
from .heuristic import (
    CandidateMap,
    CostBreakdown,
    HeuristicOptions,
    cost_f,
    find_most_constrained_cell,
    get_affected_cells,
    initialize_possibilities,
    order_values_lcv,
    solve_heuristic,
)
from .outcome import NO_SOLUTION, SolveOutcome, check_solution
from .rng import Xorshift32, fold_seed

__version__ = "0.1.0"

__all__ = [
    "ACTIVE_BACKEND",
    "BEGINNER",
    "BenchReport",
    "BenchRow",
    "BenchmarkIntegrityError",
    "CandidateMap",
    "CellRef",
    "CostBreakdown",
    "DatasetRecord",
    "DeadEndError",
    "Difficulty",
    "EASY",
    "EXPERT",
    "Grid",
    "GridFormatError",
    "HARD",
    "HeuristicOptions",
    "InconsistentGridError",
    "LEVELS",
    "MEDIUM",
    "NO_SOLUTION",
    "PuzzlePair",
    "SolveOutcome",
    "SolverStats",
    "SudokuError",
    "Xorshift32",
    "as_grid",
    "build_dataset",
    "check_solution",
    "cost_f",
    "count_solutions",
    "derive_seed",
    "emit_report",
    "empty_grid",
    "fill_diagonal_boxes",
    "find_empty",
    "find_most_constrained_cell",
    "fold_seed",
    "generate",
    "get_affected_cells",
    "initialize_possibilities",
    "is_complete",
    "is_consistent",
    "is_valid_move",
    "order_values_lcv",
    "parse_grid",
    "read_dataset",
    "run_benchmark",
    "serialize_grid",
    "solve_backtracking",
    "solve_heuristic",
    "solve_randomized",
    "speedup",
    "warm_up",
    "write_dataset",
]
