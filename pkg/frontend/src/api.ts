// Typed client for the serve-mode HTTP/JSON API. All cluster math stays
// on the server; this module only moves JSON.

export interface GammaPoint {
  interval: string;
  alpha: number;
  beta: number;
  position: number;
}

export interface EmbeddedElement extends GammaPoint {
  label: string;
}

export interface EmbeddingResponse {
  schemaVersion: number;
  kind: string;
  elements: EmbeddedElement[];
  fountain?: { m: number; n: number } | null;
}

export interface MutateResponse {
  schemaVersion: number;
  removed: string;
  added: string;
  middle: string[];
  rectangle: GammaPoint[];
  intervalRemoved?: string;
  intervalAdded?: string;
  current: SessionCurrent;
}

export interface UndoResponse {
  schemaVersion: number;
  undone: { removed: string; added: string };
  current: SessionCurrent;
}

export interface ArcSet {
  finite: [number, number][];
  leftTails: [number, number][];
  rightTails: [number, number][];
}

export type SessionCurrent =
  | { diagonals: string[] }
  | (ArcSet & { schemaVersion?: number })
  | { added: string[]; removed: string[] };

export interface SessionDoc {
  id: string;
  kind: "polygon" | "infgon" | "projectives";
  n?: number | null;
  history: unknown[];
  current: SessionCurrent;
}

export class ApiError extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly base: string,
    private readonly fetchImpl: FetchLike = (u, i) => fetch(u, i)
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const resp = await this.fetchImpl(this.base + path, {
      method,
      headers: body === undefined ? undefined : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const text = await resp.text();
    const doc = text ? JSON.parse(text) : {};
    if (!resp.ok) {
      throw new ApiError(doc.error ?? `HTTP ${resp.status}`, resp.status);
    }
    return doc as T;
  }

  createSession(body: { kind: string; n?: number; arcs?: ArcSet }): Promise<SessionDoc> {
    return this.request("POST", "/session", body);
  }

  getSession(id: string): Promise<SessionDoc> {
    return this.request("GET", `/session/${id}`);
  }

  embedding(id: string): Promise<EmbeddingResponse> {
    return this.request("GET", `/session/${id}/embedding`);
  }

  mutate(id: string, at: string): Promise<MutateResponse> {
    return this.request("POST", `/session/${id}/mutate`, { at });
  }

  undo(id: string): Promise<UndoResponse> {
    return this.request("POST", `/session/${id}/undo`);
  }
}
