"""Exception types shared across the package."""


class SudokuError(Exception):
    """Base class for all package-specific errors."""

    code = "sudoku_error"


class GridFormatError(SudokuError, ValueError):
    """Text or array input does not describe a 9x9 board."""

    code = "grid_format"


class InconsistentGridError(SudokuError, ValueError):
    """A digit 1-9 repeats within a row, column, or 3x3 box."""

    code = "inconsistent_grid"


class DeadEndError(SudokuError):
    """A search state contains an empty candidate set (contradiction)."""

    code = "dead_end"


class BenchmarkIntegrityError(SudokuError):
    """A benchmarked solver produced an invalid or mismatched solution."""

    code = "benchmark_integrity"
