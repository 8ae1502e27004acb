import numpy as np
import pytest

import sudokulab as sl
from sudokulab.errors import InconsistentGridError
from sudokulab.outcome import NO_SOLUTION

from conftest import UNIQUE_MEDIUM_SEED, make_unsolvable_grid, random_consistent_grid


def test_full_grid_solves_with_zero_nodes():
    full = sl.generate(sl.BEGINNER, 2).solution
    outcome = sl.solve_backtracking(full)
    assert outcome.solved
    assert (outcome.solution == full).all()
    assert outcome.nodes == 0
    assert outcome.backtracks == 0
    assert outcome.error is None


def test_single_forced_cell():
    g = sl.generate(sl.BEGINNER, 2).solution.copy()
    forced = int(g[8, 8])
    g[8, 8] = 0
    outcome = sl.solve_backtracking(g)
    assert outcome.solved
    assert outcome.solution[8, 8] == forced
    assert outcome.nodes == 1
    assert outcome.backtracks == 0


def test_unsolvable_reports_no_solution():
    g = make_unsolvable_grid()
    assert sl.count_solutions(g, 1) == 0  # oracle-certified unsolvable
    outcome = sl.solve_backtracking(g)
    assert not outcome.solved
    assert outcome.solution is None
    assert outcome.error == NO_SOLUTION
    assert outcome.nodes == outcome.backtracks


def test_unique_puzzle_recovers_generator_solution():
    pair = sl.generate(sl.MEDIUM, UNIQUE_MEDIUM_SEED)
    assert sl.count_solutions(pair.puzzle, 2) == 1
    outcome = sl.solve_backtracking(pair.puzzle)
    assert outcome.solved
    # unique completion ⟹ it must be the one the generator carved from
    assert (outcome.solution == pair.solution).all()


def test_classic_puzzle(classic_puzzle, classic_solution):
    assert sl.count_solutions(classic_puzzle, 2) == 1
    outcome = sl.solve_backtracking(classic_puzzle)
    assert (outcome.solution == classic_solution).all()


def test_inconsistent_input_is_an_error_not_no_solution():
    g = sl.empty_grid()
    g[0, 0] = g[8, 0] = 3
    with pytest.raises(InconsistentGridError):
        sl.solve_backtracking(g)


def test_input_grid_never_mutated():
    pair = sl.generate(sl.HARD, 4)
    before = pair.puzzle.copy()
    sl.solve_backtracking(pair.puzzle)
    assert (pair.puzzle == before).all()


def test_determinism():
    pair = sl.generate(sl.EXPERT, 6)
    a = sl.solve_backtracking(pair.puzzle)
    b = sl.solve_backtracking(pair.puzzle)
    assert (a.solution == b.solution).all()
    assert (a.nodes, a.backtracks) == (b.nodes, b.backtracks)


def test_clue_preservation():
    for seed in range(4):
        pair = sl.generate(sl.HARD, seed)
        outcome = sl.solve_backtracking(pair.puzzle)
        mask = pair.puzzle > 0
        assert (outcome.solution[mask] == pair.puzzle[mask]).all()
        assert sl.check_solution(pair.puzzle, outcome)


def test_oracle_agreement_on_random_grids():
    rng = np.random.default_rng(101)
    grids = [random_consistent_grid(rng) for _ in range(60)]
    grids.append(make_unsolvable_grid())
    solvable_seen = unsolvable_seen = 0
    for g in grids:
        outcome = sl.solve_backtracking(g)
        if sl.count_solutions(g, 1) >= 1:
            solvable_seen += 1
            assert outcome.solved
            assert sl.check_solution(g, outcome)
        else:
            unsolvable_seen += 1
            assert not outcome.solved
    assert solvable_seen > 0 and unsolvable_seen > 0


def test_backtracks_bounded_by_nodes():
    for seed in range(4):
        outcome = sl.solve_backtracking(sl.generate(sl.EXPERT, seed).puzzle)
        assert outcome.backtracks <= outcome.nodes
        assert outcome.elapsed_ns > 0
        assert outcome.elapsed_ms == outcome.elapsed_ns / 1e6
