import pytest
from fastapi.testclient import TestClient

import sudokulab as sl
from sudokulab.service import create_app

from conftest import CLASSIC_PUZZLE, CLASSIC_SOLUTION, make_unsolvable_grid


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    resp = client.get("/api/health")
    assert resp.status_code == 200
    body = resp.json()
    assert body["status"] == "ok"
    assert body["version"] == sl.__version__


def test_generate_beginner_clue_count(client):
    resp = client.post("/api/generate", json={"difficulty": "beginner", "seed": 7})
    assert resp.status_code == 200
    body = resp.json()
    assert sum(c != "0" for c in body["puzzle"]) == 50
    assert body["difficulty"] == "beginner"
    assert body["seed"] == 7
    assert sum(c != "0" for c in body["solution"]) == 81


def test_generate_expert_clue_count(client):
    resp = client.post("/api/generate", json={"difficulty": "expert", "seed": 7})
    assert sum(c != "0" for c in resp.json()["puzzle"]) == 20


def test_generate_accepts_extreme_alias(client):
    resp = client.post("/api/generate", json={"difficulty": "extreme", "seed": 1})
    assert resp.status_code == 200
    assert resp.json()["difficulty"] == "expert"


def test_generate_is_deterministic(client):
    a = client.post("/api/generate", json={"difficulty": "hard", "seed": 11})
    b = client.post("/api/generate", json={"difficulty": "hard", "seed": 11})
    assert a.json() == b.json()


def test_generate_makes_seed_when_absent(client):
    first = client.post("/api/generate", json={"difficulty": "easy"})
    assert first.status_code == 200
    body = first.json()
    replay = client.post(
        "/api/generate", json={"difficulty": "easy", "seed": body["seed"]}
    )
    assert replay.json() == body


def test_generate_unknown_difficulty(client):
    resp = client.post("/api/generate", json={"difficulty": "impossible"})
    assert resp.status_code == 400
    body = resp.json()
    assert body["code"] == "unknown_difficulty"
    assert "message" in body


def test_validate_empty_grid(client):
    resp = client.post(
        "/api/validate",
        json={"puzzle": "0" * 81, "row": 0, "col": 0, "num": 5},
    )
    assert resp.json() == {"valid": True}


def test_validate_row_conflict(client):
    puzzle = "0" * 3 + "5" + "0" * 77  # 5 at (0, 3)
    resp = client.post(
        "/api/validate", json={"puzzle": puzzle, "row": 0, "col": 0, "num": 5}
    )
    assert resp.json() == {"valid": False}


def test_validate_bounds(client):
    resp = client.post(
        "/api/validate", json={"puzzle": "0" * 81, "row": 9, "col": 0, "num": 5}
    )
    assert resp.status_code == 400
    assert resp.json()["code"] == "bad_request"
    resp = client.post(
        "/api/validate", json={"puzzle": "0" * 81, "row": 0, "col": 0, "num": 0}
    )
    assert resp.status_code == 400


def test_validate_malformed_grid(client):
    resp = client.post(
        "/api/validate", json={"puzzle": "12", "row": 0, "col": 0, "num": 5}
    )
    assert resp.status_code == 400
    assert resp.json()["code"] == "grid_format"


def test_solve_both_algorithms_unique_puzzle(client):
    resp = client.post(
        "/api/solve",
        json={"puzzle": CLASSIC_PUZZLE, "algorithms": ["backtracking", "heuristic"]},
    )
    assert resp.status_code == 200
    results = resp.json()["results"]
    assert [r["algorithm"] for r in results] == ["backtracking", "heuristic"]
    for r in results:
        assert r["solved"] is True
        assert r["solution"] == CLASSIC_SOLUTION
        assert r["elapsed_ms"] > 0
        assert r["nodes"] > 0
        assert r["error"] is None


def test_solve_echoes_request_order(client):
    resp = client.post(
        "/api/solve",
        json={"puzzle": CLASSIC_PUZZLE, "algorithms": ["heuristic", "backtracking"]},
    )
    assert [r["algorithm"] for r in resp.json()["results"]] == [
        "heuristic", "backtracking",
    ]


def test_solve_full_grid_zero_nodes(client):
    resp = client.post(
        "/api/solve",
        json={"puzzle": CLASSIC_SOLUTION, "algorithms": ["backtracking", "heuristic"]},
    )
    for r in resp.json()["results"]:
        assert r["solved"] and r["nodes"] == 0


def test_solve_unsolvable_reports_no_solution_in_body(client):
    puzzle = sl.serialize_grid(make_unsolvable_grid())
    resp = client.post(
        "/api/solve",
        json={"puzzle": puzzle, "algorithms": ["backtracking", "heuristic"]},
    )
    assert resp.status_code == 200
    for r in resp.json()["results"]:
        assert r["solved"] is False
        assert r["solution"] is None
        assert r["error"] == "No solution"


def test_solve_rejects_inconsistent(client):
    puzzle = "77" + "0" * 79
    resp = client.post(
        "/api/solve", json={"puzzle": puzzle, "algorithms": ["backtracking"]}
    )
    assert resp.status_code == 400
    assert resp.json()["code"] == "inconsistent_grid"


def test_solve_rejects_unknown_algorithm(client):
    resp = client.post(
        "/api/solve", json={"puzzle": "0" * 81, "algorithms": ["dlx"]}
    )
    assert resp.status_code == 400


def test_solve_rejects_empty_algorithms(client):
    resp = client.post("/api/solve", json={"puzzle": "0" * 81, "algorithms": []})
    assert resp.status_code == 400


def test_solve_shuffled_ordering_reproducible(client):
    req = {
        "puzzle": CLASSIC_PUZZLE,
        "algorithms": ["heuristic"],
        "ordering": "shuffled",
        "seed": 42,
    }
    a = client.post("/api/solve", json=req).json()["results"][0]
    b = client.post("/api/solve", json=req).json()["results"][0]
    assert a["solution"] == b["solution"]
    assert a["nodes"] == b["nodes"]


def test_statelessness(client):
    req = {"puzzle": CLASSIC_PUZZLE, "algorithms": ["backtracking"]}
    a = client.post("/api/solve", json=req).json()["results"][0]
    b = client.post("/api/solve", json=req).json()["results"][0]
    a.pop("elapsed_ms")
    b.pop("elapsed_ms")
    assert a == b


def test_static_ui_served(tmp_path):
    (tmp_path / "index.html").write_text("<html><body>board</body></html>")
    client = TestClient(create_app(static_dir=tmp_path))
    resp = client.get("/")
    assert resp.status_code == 200
    assert "board" in resp.text
    # API routes take precedence over static mount
    assert client.get("/api/health").status_code == 200
