#!/usr/bin/env python3
"""Compare the numba-jitted kernels against the interpreted numpy
fallback on the same solver workload.

Each backend runs in its own subprocess (the backend is fixed per
process by SUDOKULAB_BACKEND), solving the same generated puzzles with
both solvers. Solutions and node counts must match bit-for-bit across
backends; only the wall time differs.

Usage: python benchmarks/backend_compare.py [--per-level N] [--seed S]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, statistics, sys
import sudokulab as sl
from sudokulab.bench import derive_seed

per_level, seed = int(sys.argv[1]), int(sys.argv[2])
sl.warm_up()
out = {"backend": sl.ACTIVE_BACKEND, "rows": []}
for level in sl.LEVELS.values():
    bt_ms, h_ms, sigs = [], [], []
    for i in range(per_level):
        pair = sl.generate(level, derive_seed(seed, level.name, i))
        bt = sl.solve_backtracking(pair.puzzle)
        h = sl.solve_heuristic(pair.puzzle)
        bt_ms.append(min(sl.solve_backtracking(pair.puzzle).elapsed_ns
                         for _ in range(3)) / 1e6)
        h_ms.append(min(sl.solve_heuristic(pair.puzzle).elapsed_ns
                        for _ in range(3)) / 1e6)
        sigs.append([bt.nodes, bt.backtracks, h.nodes, h.backtracks,
                     sl.serialize_grid(bt.solution), sl.serialize_grid(h.solution)])
    out["rows"].append({
        "difficulty": level.name,
        "backtracking_ms": statistics.fmean(bt_ms),
        "heuristic_ms": statistics.fmean(h_ms),
        "signature": sigs,
    })
print(json.dumps(out))
"""


def run_backend(backend: str, per_level: int, seed: int) -> dict:
    env = dict(os.environ, SUDOKULAB_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-c", WORKER, str(per_level), str(seed)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(proc.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--per-level", type=int, default=5)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    print(f"workload: {args.per_level} puzzles/level, master seed {args.seed}")
    results = {}
    for backend in ("numba", "numpy"):
        print(f"running {backend} backend ...", flush=True)
        results[backend] = run_backend(backend, args.per_level, args.seed)

    mismatch = False
    for row_j, row_p in zip(results["numba"]["rows"], results["numpy"]["rows"]):
        if row_j["signature"] != row_p["signature"]:
            mismatch = True
            print(f"!! result mismatch at {row_j['difficulty']}")
    header = (f"{'difficulty':<11}{'numba bt (ms)':>14}{'numpy bt (ms)':>14}"
              f"{'bt x':>8}{'numba heur':>12}{'numpy heur':>12}{'heur x':>8}")
    print()
    print(header)
    print("-" * len(header))
    for row_j, row_p in zip(results["numba"]["rows"], results["numpy"]["rows"]):
        bt_x = row_p["backtracking_ms"] / row_j["backtracking_ms"]
        h_x = row_p["heuristic_ms"] / row_j["heuristic_ms"]
        print(f"{row_j['difficulty']:<11}"
              f"{row_j['backtracking_ms']:>14.4f}{row_p['backtracking_ms']:>14.4f}"
              f"{bt_x:>7.0f}x"
              f"{row_j['heuristic_ms']:>12.4f}{row_p['heuristic_ms']:>12.4f}"
              f"{h_x:>7.0f}x")
    print()
    if mismatch:
        print("backends disagree: FAIL")
        return 1
    print("solutions and node counts identical across backends: OK")
    return 0


if __name__ == "__main__":
    sys.exit(main())
