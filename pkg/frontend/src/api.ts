import type { ApiError, Label, ServerState } from "./types.js";

export class ServerError extends Error {
  readonly name_: string;
  constructor(payload: ApiError) {
    super(payload.message);
    this.name_ = payload.error;
  }
}

export interface RequestLogEntry {
  method: string;
  path: string;
  status: number;
}

// Thin typed client; all state transitions go through POSTs that return
// the full refreshed state, so the UI never has to guess.
export class ApiClient {
  readonly log: RequestLogEntry[] = [];

  constructor(
    private readonly base: string = "",
    private readonly token: string = "ui",
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const url = `${this.base}${path}?token=${encodeURIComponent(this.token)}`;
    const resp = await fetch(url, {
      method,
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    this.log.push({ method, path, status: resp.status });
    const payload = await resp.json();
    if (!resp.ok) {
      throw new ServerError(payload as ApiError);
    }
    return payload as T;
  }

  state(): Promise<ServerState> {
    return this.request("GET", "/api/state");
  }

  load(collection: { k: number; n: number; labels: Label[] }): Promise<ServerState> {
    return this.request("POST", "/api/load", { collection });
  }

  mutate(label: Label): Promise<ServerState> {
    return this.request("POST", "/api/mutate", { label });
  }

  orbitMutate(label: Label): Promise<ServerState> {
    return this.request("POST", "/api/orbit-mutate", { label });
  }

  setCut(arrows: number[]): Promise<ServerState> {
    return this.request("POST", "/api/cut", { arrows });
  }

  cutMutate(label: Label): Promise<ServerState> {
    return this.request("POST", "/api/cut-mutate", { label });
  }

  undo(): Promise<ServerState> {
    return this.request("POST", "/api/undo", {});
  }
}
