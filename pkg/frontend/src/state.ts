// Session view state. Every transition is a server mutation or undo; the
// client never computes compatibility itself (single source of truth).
// Mutations update optimistically and roll back when the server says 409.

import {
  ApiClient,
  ApiError,
  EmbeddingResponse,
  GammaPoint,
  SessionCurrent,
  SessionDoc,
} from "./api.js";

export type Mode = "POLYGON" | "INFGON" | "STRIP";

export interface MutationStep {
  removed: string;
  added: string;
  middle: string[];
  rectangle: GammaPoint[];
}

export interface ViewState {
  mode: Mode;
  sessionId: string | null;
  kind: SessionDoc["kind"] | null;
  n: number;
  current: SessionCurrent | null;
  embedding: EmbeddingResponse | null;
  undoStack: MutationStep[];
  lastRectangle: GammaPoint[] | null;
  notice: string | null;
  pending: boolean;
}

export function initialState(): ViewState {
  return {
    mode: "POLYGON",
    sessionId: null,
    kind: null,
    n: 2,
    current: null,
    embedding: null,
    undoStack: [],
    lastRectangle: null,
    notice: null,
    pending: false,
  };
}

export type Listener = (state: ViewState) => void;

export class SessionStore {
  state: ViewState = initialState();
  private listeners: Listener[] = [];

  constructor(private readonly api: ApiClient) {}

  subscribe(fn: Listener): void {
    this.listeners.push(fn);
  }

  private emit(): void {
    for (const fn of this.listeners) fn(this.state);
  }

  private patch(part: Partial<ViewState>): void {
    this.state = { ...this.state, ...part };
    this.emit();
  }

  async start(kind: SessionDoc["kind"], options: { n?: number; arcs?: unknown } = {}): Promise<void> {
    this.patch({ pending: true, notice: null });
    const doc = await this.api.createSession({ kind, ...(options as object) });
    const embedding = await this.api.embedding(doc.id);
    this.patch({
      sessionId: doc.id,
      kind: doc.kind,
      n: doc.n ?? this.state.n,
      current: doc.current,
      embedding,
      undoStack: [],
      lastRectangle: null,
      pending: false,
      mode: kind === "infgon" ? "INFGON" : "POLYGON",
    });
  }

  async mutate(at: string): Promise<void> {
    const id = this.state.sessionId;
    if (!id || this.state.pending) return;
    const before = this.state;
    // optimistic: grey out and show intent; rolled back on failure
    this.patch({ pending: true, notice: `mutating at ${at}…` });
    try {
      const step = await this.api.mutate(id, at);
      const embedding = await this.api.embedding(id);
      this.patch({
        current: step.current,
        embedding,
        undoStack: [
          ...before.undoStack,
          {
            removed: step.removed,
            added: step.added,
            middle: step.middle,
            rectangle: step.rectangle,
          },
        ],
        lastRectangle: step.rectangle,
        notice: `${step.removed} → ${step.added}`,
        pending: false,
      });
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        // non-blocking notice; state rolls back untouched
        this.patch({ ...before, notice: `not mutable here: ${err.message}`, pending: false });
        return;
      }
      this.patch({ ...before, notice: String(err), pending: false });
      throw err;
    }
  }

  async undo(): Promise<void> {
    const id = this.state.sessionId;
    if (!id || this.state.pending || this.state.undoStack.length === 0) return;
    const before = this.state;
    this.patch({ pending: true });
    try {
      const resp = await this.api.undo(id);
      const embedding = await this.api.embedding(id);
      const undoStack = before.undoStack.slice(0, -1);
      this.patch({
        current: resp.current,
        embedding,
        undoStack,
        lastRectangle: undoStack.length ? undoStack[undoStack.length - 1].rectangle : null,
        notice: `undid ${resp.undone.removed} → ${resp.undone.added}`,
        pending: false,
      });
    } catch (err) {
      this.patch({ ...before, notice: String(err), pending: false });
      throw err;
    }
  }

  setMode(mode: Mode): void {
    this.patch({ mode });
  }
}
