import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { SessionStore } from "../src/state.js";
import fixture from "./fixtures/pentagon.json";

// A fake transport that serves the engine-recorded fixture; stateful so
// mutate/undo move between the recorded phases exactly like the server.
export function fixtureClient(): ApiClient {
  let phase: "fan" | "flipped" = "fan";
  const fetchImpl = async (url: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    const body = init?.body ? JSON.parse(String(init.body)) : {};
    const ok = (doc: unknown) =>
      new Response(JSON.stringify(doc), { status: 200 });
    const fail = (status: number, error: string) =>
      new Response(JSON.stringify({ error }), { status });

    if (method === "POST" && url.endsWith("/session")) {
      phase = "fan";
      return ok(fixture.created);
    }
    if (url.endsWith("/embedding")) {
      return ok(phase === "fan" ? fixture.embeddingFan : fixture.embeddingAfter);
    }
    if (method === "POST" && url.endsWith("/mutate")) {
      if (phase === "fan" && body.at === "1-3") {
        phase = "flipped";
        return ok(fixture.mutated);
      }
      return fail(409, `no mutation at ${body.at} recorded`);
    }
    if (method === "POST" && url.endsWith("/undo")) {
      if (phase === "flipped") {
        phase = "fan";
        return ok(fixture.undone);
      }
      return fail(409, "nothing to undo");
    }
    if (url.includes("/session/")) {
      return ok(fixture.created);
    }
    return fail(404, `no route ${method} ${url}`);
  };
  return new ApiClient("http://engine", fetchImpl);
}

describe("SessionStore", () => {
  it("mirrors the server through start/mutate/undo", async () => {
    const store = new SessionStore(fixtureClient());
    await store.start("polygon", { n: 2 });
    expect(store.state.current).toEqual({ diagonals: ["1-3", "1-4"] });
    expect(store.state.undoStack).toHaveLength(0);

    await store.mutate("1-3");
    expect(store.state.current).toEqual({ diagonals: ["1-4", "2-4"] });
    expect(store.state.undoStack).toHaveLength(1);
    expect(store.state.lastRectangle).toHaveLength(4);

    await store.undo();
    expect(store.state.current).toEqual({ diagonals: ["1-3", "1-4"] });
    expect(store.state.undoStack).toHaveLength(0);
    expect(store.state.lastRectangle).toBeNull();
  });

  it("rolls back optimistic state on a 409 and keeps a notice", async () => {
    const store = new SessionStore(fixtureClient());
    await store.start("polygon", { n: 2 });
    const before = store.state.current;
    await store.mutate("9-9");
    expect(store.state.current).toEqual(before);
    expect(store.state.undoStack).toHaveLength(0);
    expect(store.state.notice).toMatch(/not mutable here/);
  });

  it("surfaces transport errors", async () => {
    const bad = new ApiClient("http://engine", async () => {
      return new Response(JSON.stringify({ error: "boom" }), { status: 500 });
    });
    const store = new SessionStore(bad);
    await expect(store.start("polygon", { n: 2 })).rejects.toBeInstanceOf(ApiError);
  });
});
