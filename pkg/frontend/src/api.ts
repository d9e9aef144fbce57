/** Thin typed client for the session protocol; state is server-authoritative. */

import type {
  AnalysisResponse,
  ApiError,
  DivisorPayload,
  MoveKind,
  ServerState,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ServerError extends Error {
  readonly code: string;
  readonly path: string;

  constructor(error: ApiError, readonly status: number) {
    super(error.message);
    this.code = error.code;
    this.path = error.path;
  }
}

export class GameClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.base}${path}`, init);
    const body = await response.json();
    if (!response.ok) {
      throw new ServerError(body as ApiError, response.status);
    }
    return body as T;
  }

  createSession(payload: DivisorPayload): Promise<ServerState> {
    return this.request("/sessions", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  getState(sessionId: string): Promise<ServerState> {
    return this.request(`/sessions/${sessionId}`);
  }

  postMove(sessionId: string, kind: MoveKind, vertices: string[]): Promise<ServerState> {
    return this.request(`/sessions/${sessionId}/moves`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ kind, vertices: [...vertices].sort() }),
    });
  }

  undo(sessionId: string): Promise<ServerState> {
    return this.request(`/sessions/${sessionId}/undo`, { method: "POST" });
  }

  analysis(sessionId: string, kind: string, q?: string): Promise<AnalysisResponse> {
    const query = q ? `?q=${encodeURIComponent(q)}` : "";
    return this.request(`/sessions/${sessionId}/analysis/${kind}${query}`);
  }
}
