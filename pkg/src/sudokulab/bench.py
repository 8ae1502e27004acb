"""Benchmark harness: dataset construction, timing, aggregation, output.

Reproduces the comparative timing study: a dataset of generated puzzles
(by default 100 per difficulty level), both solvers timed on every
puzzle with warmup and repeats on a monotonic clock, per-difficulty
aggregates, and the speedup ratio backtracking/heuristic per level.

Absolute milliseconds are machine-bound; the meaningful outputs are the
orderings (heuristic faster, and by a margin that grows with
difficulty) and the node counts, which are machine-independent.
"""

from __future__ import annotations

import concurrent.futures
import csv
import hashlib
import io
import json
import statistics
import sys
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Sequence

import numpy as np

from . import backend
from .backtracker import solve_backtracking
from .board import Difficulty, Grid, LEVELS, count_solutions, parse_grid, serialize_grid
from .errors import BenchmarkIntegrityError
from .generator import generate
from .heuristic import HeuristicOptions, solve_heuristic
from .outcome import check_solution

CLOCK_SOURCE = "time.perf_counter_ns"


@dataclass(frozen=True)
class DatasetRecord:
    """One benchmark workload: a puzzle, its generating recipe, and the
    solution it was carved from."""

    id: int
    difficulty: Difficulty
    seed: int
    puzzle: Grid
    solution: Grid


def derive_seed(master_seed: int, difficulty_name: str, index: int) -> int:
    """Per-puzzle seed: first 8 bytes, big-endian, of
    SHA-256("{master_seed}:{difficulty_name}:{index}")."""
    text = f"{master_seed}:{difficulty_name}:{index}"
    digest = hashlib.sha256(text.encode("ascii")).digest()
    return int.from_bytes(digest[:8], "big")


def build_dataset(per_level: int, master_seed: int) -> List[DatasetRecord]:
    """`per_level` puzzles for each of the five standard levels, easiest
    first, with sequential ids and seeds derived from `master_seed`."""
    if per_level < 1:
        raise ValueError("per_level must be >= 1")
    records = []
    next_id = 0
    for difficulty in LEVELS.values():
        for index in range(per_level):
            seed = derive_seed(master_seed, difficulty.name, index)
            pair = generate(difficulty, seed)
            records.append(
                DatasetRecord(
                    id=next_id,
                    difficulty=difficulty,
                    seed=seed,
                    puzzle=pair.puzzle,
                    solution=pair.solution,
                )
            )
            next_id += 1
    return records


DATASET_FIELDS = ("id", "difficulty", "seed", "puzzle", "solution")


def write_dataset(records: Sequence[DatasetRecord], path) -> None:
    """One CSV row per record: id, difficulty, seed, puzzle, solution."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(DATASET_FIELDS)
        for rec in records:
            writer.writerow(
                [
                    rec.id,
                    rec.difficulty.name,
                    rec.seed,
                    serialize_grid(rec.puzzle),
                    serialize_grid(rec.solution),
                ]
            )


def read_dataset(path) -> List[DatasetRecord]:
    records = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            records.append(
                DatasetRecord(
                    id=int(row["id"]),
                    difficulty=Difficulty.from_name(row["difficulty"]),
                    seed=int(row["seed"]),
                    puzzle=parse_grid(row["puzzle"]),
                    solution=parse_grid(row["solution"]),
                )
            )
    return records


@dataclass(frozen=True)
class SolverStats:
    """Per-difficulty aggregate for one solver. The per-puzzle statistic
    is the median of the measured repeats; mean/median/stddev here are
    taken over those per-puzzle medians."""

    mean_ms: float
    median_ms: float
    stddev_ms: float
    mean_nodes: float
    median_nodes: float


@dataclass(frozen=True)
class BenchRow:
    difficulty: str
    n: int
    backtracking: SolverStats
    heuristic: SolverStats
    speedup_raw: float
    speedup: float


@dataclass(frozen=True)
class BenchReport:
    rows: List[BenchRow]
    metadata: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"rows": [asdict(r) for r in self.rows], "metadata": self.metadata}


def speedup(backtracking_ms: float, heuristic_ms: float) -> float:
    """backtracking_ms / heuristic_ms, rounded half-up to 2 decimals for
    table display. The raw quotient is kept separately in reports."""
    from decimal import ROUND_HALF_UP, Decimal

    if heuristic_ms <= 0:
        raise ValueError(f"heuristic_ms must be > 0, got {heuristic_ms}")
    raw = backtracking_ms / heuristic_ms
    return float(Decimal(repr(raw)).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class _PuzzleMeasurement:
    record_id: int
    difficulty: str
    bt_median_ns: float
    bt_nodes: int
    heur_median_ns: float
    heur_nodes: int


def _time_solver(solve_fn, puzzle, repeats: int, warmup: int, label: str):
    """Verification run, remaining warmups, then `repeats` measured runs.
    Returns (median elapsed ns over repeats, nodes from the verification
    run). The verification run counts as one warmup run."""
    verified = solve_fn(puzzle)
    if not verified.solved:
        raise BenchmarkIntegrityError(f"{label}: puzzle reported unsolvable")
    if not check_solution(puzzle, verified):
        raise BenchmarkIntegrityError(f"{label}: solution failed validation")
    for _ in range(max(0, warmup - 1)):
        solve_fn(puzzle)
    times = [solve_fn(puzzle).elapsed_ns for _ in range(repeats)]
    return statistics.median(times), verified, times


def _measure_record(
    record: DatasetRecord, repeats: int, warmup: int, ordering: str
) -> _PuzzleMeasurement:
    heur_opts = _heuristic_opts(ordering, record.seed)
    label_bt = f"backtracking on record {record.id}"
    label_h = f"heuristic on record {record.id}"
    bt_median, bt_out, _ = _time_solver(
        solve_backtracking, record.puzzle, repeats, warmup, label_bt
    )
    heur_median, heur_out, _ = _time_solver(
        lambda p: solve_heuristic(p, heur_opts), record.puzzle, repeats, warmup, label_h
    )
    if count_solutions(record.puzzle, 2) == 1:
        if not np.array_equal(bt_out.solution, heur_out.solution):
            raise BenchmarkIntegrityError(
                f"solvers disagree on unique-solution record {record.id}"
            )
    return _PuzzleMeasurement(
        record_id=record.id,
        difficulty=record.difficulty.name,
        bt_median_ns=bt_median,
        bt_nodes=bt_out.nodes,
        heur_median_ns=heur_median,
        heur_nodes=heur_out.nodes,
    )


def _heuristic_opts(ordering: str, record_seed: int) -> HeuristicOptions:
    if ordering == "shuffled":
        return HeuristicOptions(value_ordering="shuffled", seed=record_seed)
    return HeuristicOptions(value_ordering=ordering)


def _measure_record_star(args):
    return _measure_record(*args)


def run_benchmark(
    dataset: Sequence[DatasetRecord],
    repeats: int = 10,
    warmup: int = 3,
    *,
    ordering: str = "natural",
    jobs: int = 1,
) -> BenchReport:
    """Time both solvers over `dataset` and aggregate per difficulty.

    Solutions are validated (and cross-checked on oracle-certified
    unique puzzles) before any timing counts; a violation aborts with
    BenchmarkIntegrityError. jobs > 1 spreads puzzles over worker
    processes — each timed solve still runs alone in its process.
    """
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    backend.warm_up()
    args = [(rec, repeats, warmup, ordering) for rec in dataset]
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            measurements = list(pool.map(_measure_record_star, args, chunksize=4))
    else:
        measurements = [_measure_record_star(a) for a in args]

    by_difficulty: Dict[str, List[_PuzzleMeasurement]] = {}
    for m in measurements:
        by_difficulty.setdefault(m.difficulty, []).append(m)

    rows = []
    for name, ms in by_difficulty.items():
        bt_ms = [m.bt_median_ns / 1e6 for m in ms]
        heur_ms = [m.heur_median_ns / 1e6 for m in ms]
        bt_mean = statistics.fmean(bt_ms)
        heur_mean = statistics.fmean(heur_ms)
        rows.append(
            BenchRow(
                difficulty=name,
                n=len(ms),
                backtracking=_stats(bt_ms, [m.bt_nodes for m in ms]),
                heuristic=_stats(heur_ms, [m.heur_nodes for m in ms]),
                speedup_raw=bt_mean / heur_mean,
                speedup=speedup(bt_mean, heur_mean),
            )
        )
    metadata = {
        "clock": CLOCK_SOURCE,
        "repeats": repeats,
        "warmup": warmup,
        "ordering": ordering,
        "jobs": jobs,
        "backend": backend.ACTIVE_BACKEND,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "python": sys.version.split()[0],
        "numpy": np.__version__,
        "n_puzzles": len(dataset),
    }
    return BenchReport(rows=rows, metadata=metadata)


def _stats(times_ms: List[float], nodes: List[int]) -> SolverStats:
    return SolverStats(
        mean_ms=statistics.fmean(times_ms),
        median_ms=statistics.median(times_ms),
        stddev_ms=statistics.stdev(times_ms) if len(times_ms) > 1 else 0.0,
        mean_nodes=statistics.fmean(nodes),
        median_nodes=statistics.median(nodes),
    )


REPORT_FORMATS = ("table", "csv", "chart-data")


def emit_report(report: BenchReport, format: str, out_dir=None) -> str:
    """Render `report`.

    table: returns the two result tables as text (written to
    report.txt when out_dir is given). csv: returns CSV text, one row
    per difficulty (written to report.csv). chart-data: writes
    chart_bar.json and chart_lines.json under out_dir (required) and
    returns the paths.
    """
    if format == "table":
        text = _render_tables(report)
        if out_dir is not None:
            _write(Path(out_dir) / "report.txt", text)
        return text
    if format == "csv":
        text = _render_csv(report)
        if out_dir is not None:
            _write(Path(out_dir) / "report.csv", text)
        return text
    if format == "chart-data":
        if out_dir is None:
            raise ValueError("chart-data format requires out_dir")
        paths = _write_chart_data(report, Path(out_dir))
        return "\n".join(str(p) for p in paths)
    raise ValueError(f"format must be one of {REPORT_FORMATS}, got {format!r}")


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def _render_tables(report: BenchReport) -> str:
    lines = []
    lines.append("Average Solving Time (ms)")
    header = f"{'Difficulty':<12}{'Backtracking (ms)':>20}{'Heuristic (ms)':>18}"
    lines.append(header)
    lines.append("-" * len(header))
    for row in report.rows:
        lines.append(
            f"{row.difficulty:<12}"
            f"{row.backtracking.mean_ms:>20.3f}"
            f"{row.heuristic.mean_ms:>18.3f}"
        )
    lines.append("")
    lines.append("Speedup Ratio of Heuristic Solver Over Backtracking")
    header2 = (
        f"{'Difficulty':<12}{'Backtracking (ms)':>20}{'Heuristic (ms)':>18}"
        f"{'Ratio (y/x)':>14}  Interpretation"
    )
    lines.append(header2)
    lines.append("-" * len(header2))
    for row in report.rows:
        lines.append(
            f"{row.difficulty:<12}"
            f"{row.backtracking.mean_ms:>20.3f}"
            f"{row.heuristic.mean_ms:>18.3f}"
            f"{row.speedup:>14.2f}"
            f"  ~{row.speedup:.2f}x faster"
        )
    lines.append("")
    meta = report.metadata
    lines.append(
        f"(n={meta.get('n_puzzles')}, repeats={meta.get('repeats')}, "
        f"warmup={meta.get('warmup')}, ordering={meta.get('ordering')}, "
        f"backend={meta.get('backend')}, clock={meta.get('clock')})"
    )
    return "\n".join(lines)


CSV_COLUMNS = (
    "difficulty",
    "n",
    "backtracking_mean_ms",
    "backtracking_median_ms",
    "backtracking_stddev_ms",
    "backtracking_mean_nodes",
    "backtracking_median_nodes",
    "heuristic_mean_ms",
    "heuristic_median_ms",
    "heuristic_stddev_ms",
    "heuristic_mean_nodes",
    "heuristic_median_nodes",
    "speedup_raw",
    "speedup",
)


def _render_csv(report: BenchReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        writer.writerow(
            [
                row.difficulty,
                row.n,
                row.backtracking.mean_ms,
                row.backtracking.median_ms,
                row.backtracking.stddev_ms,
                row.backtracking.mean_nodes,
                row.backtracking.median_nodes,
                row.heuristic.mean_ms,
                row.heuristic.median_ms,
                row.heuristic.stddev_ms,
                row.heuristic.mean_nodes,
                row.heuristic.median_nodes,
                row.speedup_raw,
                row.speedup,
            ]
        )
    return buf.getvalue()


def chart_series(report: BenchReport) -> dict:
    """Difficulty-vs-milliseconds series for both solvers, the common
    payload of both chart files (and of the web UI's results page)."""
    return {
        "labels": [row.difficulty for row in report.rows],
        "series": [
            {
                "name": "Backtracking (ms)",
                "values": [row.backtracking.mean_ms for row in report.rows],
            },
            {
                "name": "Heuristic (ms)",
                "values": [row.heuristic.mean_ms for row in report.rows],
            },
        ],
    }


def _write_chart_data(report: BenchReport, out_dir: Path) -> List[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    base = chart_series(report)
    bar = {
        "kind": "grouped-bar",
        "title": "Solving Time Comparison Across Difficulties",
        **base,
    }
    lines = {
        "kind": "line",
        "title": "Solving Time Across Difficulties",
        **base,
    }
    paths = []
    for name, payload in (("chart_bar.json", bar), ("chart_lines.json", lines)):
        path = out_dir / name
        path.write_text(json.dumps(payload, indent=2))
        paths.append(path)
    return paths
