"""Command-line interface.

Subcommands: generate (write puzzle/solution lines or dataset records),
solve (run one solver on one grid), bench (dataset + timing study +
report files), serve (HTTP API and static web UI).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import backend
from .backtracker import solve_backtracking
from .bench import (
    build_dataset,
    emit_report,
    run_benchmark,
    write_dataset,
)
from .board import Difficulty, parse_grid, serialize_grid
from .errors import DeadEndError, SudokuError
from .generator import generate
from .heuristic import HeuristicOptions, cost_f, solve_heuristic
from .rng import MAX_SEED


def _seed(value: str) -> int:
    n = int(value)
    if not (0 <= n <= MAX_SEED):
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sudokulab",
        description="Sudoku solving workbench: generator, solvers, benchmark, API server.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="generate puzzle/solution pairs")
    p_gen.add_argument("--difficulty", required=True,
                       help="beginner|easy|medium|hard|expert (or 'extreme')")
    p_gen.add_argument("--count", type=int, default=1)
    p_gen.add_argument("--seed", type=_seed, default=0,
                       help="seed of the first pair; pair i uses seed+i")
    p_gen.add_argument("--out", type=Path, default=None,
                       help="output file (default: stdout)")
    p_gen.add_argument("--records", action="store_true",
                       help="write CSV dataset records instead of line pairs")

    p_solve = sub.add_parser("solve", help="solve one grid")
    p_solve.add_argument("--algo", choices=("backtracking", "heuristic"),
                         default="backtracking")
    p_solve.add_argument("--grid", required=True,
                         help="81-character grid, or a file containing one")
    p_solve.add_argument("--ordering", choices=("natural", "shuffled", "lcv"),
                         default="natural", help="heuristic value ordering")
    p_solve.add_argument("--seed", type=_seed, default=None,
                         help="seed for shuffled ordering")
    p_solve.add_argument("--trail", action="store_true",
                         help="heuristic: undo-trail mode instead of copy-per-node")
    p_solve.add_argument("--trace-cost", action="store_true",
                         help="heuristic: print f = g + h at every search node")

    p_bench = sub.add_parser("bench", help="run the timing study")
    p_bench.add_argument("--per-level", type=int, default=100)
    p_bench.add_argument("--master-seed", type=_seed, default=0)
    p_bench.add_argument("--repeats", type=int, default=10)
    p_bench.add_argument("--warmup", type=int, default=3)
    p_bench.add_argument("--ordering", choices=("natural", "shuffled", "lcv"),
                         default="natural")
    p_bench.add_argument("--jobs", type=int, default=1,
                         help="worker processes (timed solves never share one)")
    p_bench.add_argument("--out", type=Path, required=True,
                         help="directory for dataset, report, and chart files")

    p_serve = sub.add_parser("serve", help="run the HTTP API")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--static", type=Path, default=None,
                         help="directory with the built web UI bundle")
    return parser


def _cmd_generate(args) -> int:
    difficulty = Difficulty.from_name(args.difficulty)
    pairs = [generate(difficulty, args.seed + i) for i in range(args.count)]
    if args.records:
        from .bench import DatasetRecord

        records = [
            DatasetRecord(
                id=i,
                difficulty=difficulty,
                seed=args.seed + i,
                puzzle=pair.puzzle,
                solution=pair.solution,
            )
            for i, pair in enumerate(pairs)
        ]
        if args.out is None:
            _write_records(records, sys.stdout)
        else:
            write_dataset(records, args.out)
        return 0
    lines = []
    for pair in pairs:
        lines.append(serialize_grid(pair.puzzle))
        lines.append(serialize_grid(pair.solution))
    text = "\n".join(lines) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text)
    return 0


def _write_records(records, fh) -> None:
    import csv

    from .bench import DATASET_FIELDS

    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(DATASET_FIELDS)
    for rec in records:
        writer.writerow(
            [rec.id, rec.difficulty.name, rec.seed,
             serialize_grid(rec.puzzle), serialize_grid(rec.solution)]
        )


def _read_grid_arg(value: str):
    stripped = "".join(value.split())
    if len(stripped) == 81 and all(c in ".0123456789" for c in stripped):
        return parse_grid(stripped)
    path = Path(value)
    if path.exists():
        for line in path.read_text().splitlines():
            if line.strip():
                return parse_grid(line)
        raise SudokuError(f"no grid line found in {value}")
    raise SudokuError(
        f"--grid must be an 81-character grid or an existing file, got {value!r}"
    )


def _cmd_solve(args) -> int:
    puzzle = _read_grid_arg(args.grid)
    if args.algo == "backtracking":
        backend.warm_up()
        outcome = solve_backtracking(puzzle)
    else:
        opts = HeuristicOptions(
            value_ordering=args.ordering,
            seed=args.seed,
            copy_per_node=not args.trail,
        )
        on_node = None
        if args.trace_cost:
            counter = [0]

            def on_node(grid, cmap):
                counter[0] += 1
                try:
                    cost = cost_f(grid, cmap)
                    print(
                        f"node={counter[0]} g={cost.g:.0f} h={cost.h:.4f} "
                        f"f={cost.f:.4f}"
                    )
                except DeadEndError:
                    print(f"node={counter[0]} dead-end")

        backend.warm_up()
        outcome = solve_heuristic(puzzle, opts, on_node=on_node)
    print(f"solved: {str(outcome.solved).lower()}")
    if outcome.solved:
        print(f"solution: {serialize_grid(outcome.solution)}")
    else:
        print(f"error: {outcome.error}")
    print(f"elapsed_ms: {outcome.elapsed_ms:.3f}")
    print(f"nodes: {outcome.nodes}")
    print(f"backtracks: {outcome.backtracks}")
    return 0 if outcome.solved else 1


def _cmd_bench(args) -> int:
    out_dir: Path = args.out
    out_dir.mkdir(parents=True, exist_ok=True)
    print(f"building dataset: {args.per_level} puzzles/level, "
          f"master seed {args.master_seed}", flush=True)
    records = build_dataset(args.per_level, args.master_seed)
    write_dataset(records, out_dir / "dataset.csv")
    print(f"timing {len(records)} puzzles x 2 solvers "
          f"(repeats={args.repeats}, warmup={args.warmup}, "
          f"backend={backend.ACTIVE_BACKEND})", flush=True)
    report = run_benchmark(
        records,
        repeats=args.repeats,
        warmup=args.warmup,
        ordering=args.ordering,
        jobs=args.jobs,
    )
    import json

    (out_dir / "report.json").write_text(json.dumps(report.to_dict(), indent=2))
    emit_report(report, "csv", out_dir)
    emit_report(report, "chart-data", out_dir)
    print(emit_report(report, "table", out_dir))
    print(f"\nwrote dataset.csv, report.{{json,csv,txt}}, chart_*.json to {out_dir}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "solve":
            return _cmd_solve(args)
        if args.command == "bench":
            return _cmd_bench(args)
        if args.command == "serve":
            return _cmd_serve(args)
    except (SudokuError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
