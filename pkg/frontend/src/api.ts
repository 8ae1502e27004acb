// Typed client for the workbench HTTP API.

export interface GenerateResponse {
  puzzle: string;
  solution: string;
  difficulty: string;
  seed: number;
}

export interface AlgorithmResult {
  algorithm: string;
  solved: boolean;
  solution: string | null;
  elapsed_ms: number;
  nodes: number;
  backtracks: number;
  error: string | null;
}

export interface SolveResponse {
  results: AlgorithmResult[];
}

export interface HealthResponse {
  status: string;
  version: string;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  let resp: Response;
  try {
    resp = await fetch(url, init);
  } catch (err) {
    throw new ApiError(0, "unreachable", `API unreachable: ${err}`);
  }
  const body = await resp.json().catch(() => null);
  if (!resp.ok) {
    const code = body?.code ?? "http_error";
    const message = body?.message ?? `HTTP ${resp.status}`;
    throw new ApiError(resp.status, code, message);
  }
  return body as T;
}

export class SudokuApi {
  constructor(readonly base: string = "") {}

  private post<T>(path: string, payload: unknown): Promise<T> {
    return request<T>(this.base + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  health(): Promise<HealthResponse> {
    return request<HealthResponse>(this.base + "/api/health");
  }

  generate(difficulty: string, seed?: number): Promise<GenerateResponse> {
    const payload: Record<string, unknown> = { difficulty };
    if (seed !== undefined) payload.seed = seed;
    return this.post("/api/generate", payload);
  }

  validate(
    puzzle: string,
    row: number,
    col: number,
    num: number,
  ): Promise<{ valid: boolean }> {
    return this.post("/api/validate", { puzzle, row, col, num });
  }

  solve(puzzle: string, algorithms: string[]): Promise<SolveResponse> {
    return this.post("/api/solve", { puzzle, algorithms });
  }
}
