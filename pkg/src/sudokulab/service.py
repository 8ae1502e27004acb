"""HTTP API over the generator, validator, and both solvers.

Stateless by design: every response is a function of its request body
(plus a server-generated seed, which is echoed back). No database, no
session state. Timings returned here are single-shot and indicative;
authoritative numbers come from the bench CLI.
"""

from __future__ import annotations

import secrets
from pathlib import Path
from typing import List, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__, backend
from .backtracker import solve_backtracking
from .board import Difficulty, is_consistent, is_valid_move, parse_grid, serialize_grid
from .errors import SudokuError
from .generator import generate
from .heuristic import HeuristicOptions, solve_heuristic
from .outcome import SolveOutcome
from .rng import MAX_SEED

ALGORITHMS = ("backtracking", "heuristic")


class GenerateRequest(BaseModel):
    difficulty: str
    seed: Optional[int] = Field(default=None, ge=0, le=MAX_SEED)


class GenerateResponse(BaseModel):
    puzzle: str
    solution: str
    difficulty: str
    seed: int


class ValidateRequest(BaseModel):
    puzzle: str
    row: int
    col: int
    num: int


class ValidateResponse(BaseModel):
    valid: bool


class SolveRequest(BaseModel):
    puzzle: str
    algorithms: List[str] = Field(min_length=1)
    ordering: str = "natural"
    seed: Optional[int] = Field(default=None, ge=0, le=MAX_SEED)


class AlgorithmResult(BaseModel):
    algorithm: str
    solved: bool
    solution: Optional[str]
    elapsed_ms: float
    nodes: int
    backtracks: int
    error: Optional[str]


class SolveResponse(BaseModel):
    results: List[AlgorithmResult]


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


def _result(algorithm: str, outcome: SolveOutcome) -> AlgorithmResult:
    return AlgorithmResult(
        algorithm=algorithm,
        solved=outcome.solved,
        solution=serialize_grid(outcome.solution) if outcome.solved else None,
        elapsed_ms=outcome.elapsed_ms,
        nodes=outcome.nodes,
        backtracks=outcome.backtracks,
        error=outcome.error,
    )


def create_app(static_dir: Optional[Path] = None) -> FastAPI:
    app = FastAPI(title="sudokulab", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(SudokuError)
    async def sudoku_error_handler(request: Request, exc: SudokuError):
        return _error(400, exc.code, str(exc))

    @app.exception_handler(RequestValidationError)
    async def validation_error_handler(request: Request, exc: RequestValidationError):
        return _error(400, "bad_request", str(exc.errors()))

    @app.get("/api/health")
    async def health():
        return {"status": "ok", "version": __version__}

    @app.post("/api/generate", response_model=GenerateResponse)
    async def api_generate(req: GenerateRequest):
        try:
            difficulty = Difficulty.from_name(req.difficulty)
        except ValueError as exc:
            return _error(400, "unknown_difficulty", str(exc))
        seed = req.seed if req.seed is not None else secrets.randbits(64)
        pair = generate(difficulty, seed)
        return GenerateResponse(
            puzzle=serialize_grid(pair.puzzle),
            solution=serialize_grid(pair.solution),
            difficulty=difficulty.name,
            seed=seed,
        )

    @app.post("/api/validate", response_model=ValidateResponse)
    async def api_validate(req: ValidateRequest):
        grid = parse_grid(req.puzzle)
        if not (0 <= req.row <= 8 and 0 <= req.col <= 8):
            return _error(400, "bad_request", "row and col must be in 0..8")
        if not (1 <= req.num <= 9):
            return _error(400, "bad_request", "num must be in 1..9")
        return ValidateResponse(valid=is_valid_move(grid, (req.row, req.col), req.num))

    @app.post("/api/solve", response_model=SolveResponse)
    async def api_solve(req: SolveRequest):
        for algo in req.algorithms:
            if algo not in ALGORITHMS:
                return _error(
                    400, "bad_request",
                    f"unknown algorithm {algo!r}; expected {ALGORITHMS}",
                )
        grid = parse_grid(req.puzzle)
        if not is_consistent(grid):
            return _error(400, "inconsistent_grid", "puzzle has conflicting clues")
        results = []
        for algo in req.algorithms:
            if algo == "backtracking":
                outcome = solve_backtracking(grid)
            else:
                if req.ordering == "shuffled":
                    seed = req.seed if req.seed is not None else secrets.randbits(64)
                    opts = HeuristicOptions(value_ordering="shuffled", seed=seed)
                else:
                    opts = HeuristicOptions(value_ordering=req.ordering)
                outcome = solve_heuristic(grid, opts)
            results.append(_result(algo, outcome))
        return SolveResponse(results=results)

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    # First solve should not pay JIT compile time.
    backend.warm_up()
    return app
