import { beforeEach, describe, expect, it, vi } from "vitest";
import { ApiClient } from "../src/api.js";
import { ExplorerController } from "../src/controller.js";
import type { ServerState } from "../src/types.js";

function fakeState(overrides: Partial<ServerState> = {}): ServerState {
  return {
    collection: { k: 2, n: 6, labels: [[1, 3]] },
    quiver: {
      k: 2,
      n: 6,
      vertices: [
        { label: [1, 3], frozen: false, pos: [0, 0] },
        { label: [1, 2], frozen: true, pos: [1, 0] },
      ],
      arrows: [{ id: 0, src: [1, 3], tgt: [1, 2] }],
      faces: [],
    },
    report: {
      k: 2,
      n: 6,
      memberCount: 9,
      maximal: true,
      symmetric: true,
      selfInjective: true,
      sigma: [[[1, 3], [3, 5], [1, 5]]],
      nakayamaOrder: 3,
      dimTotal: 6,
      vertices: [[1, 3]],
      dimMatrix: [[1]],
      cuts: { count: 3, homogeneousCount: 0, enoughCuts: true },
    },
    mutability: [{ label: [1, 3], valency: 4, mutable: true }],
    orbits: [{ labels: [[1, 3], [3, 5]], independent: true, mutable: false }],
    cut: null,
    undoDepth: 0,
    ...overrides,
  };
}

function mockFetch(handler: (path: string, body: unknown) => { status: number; payload: unknown }) {
  return vi.fn(async (url: RequestInfo | URL, init?: RequestInit) => {
    const path = String(url).split("?")[0];
    const body = init?.body ? JSON.parse(String(init.body)) : undefined;
    const { status, payload } = handler(path, body);
    return {
      ok: status >= 200 && status < 300,
      status,
      json: async () => payload,
    } as Response;
  });
}

describe("ExplorerController", () => {
  beforeEach(() => {
    vi.restoreAllMocks();
  });

  it("refreshes state from the server and exposes status lines", async () => {
    globalThis.fetch = mockFetch(() => ({ status: 200, payload: fakeState() }));
    const ctl = new ExplorerController(new ApiClient());
    await ctl.refresh();
    expect(ctl.state?.report.selfInjective).toBe(true);
    expect(ctl.statusLines().join("\n")).toContain("sigma cycle type: 3");
    expect(ctl.statusLines().join("\n")).toContain("Nakayama order: 3");
  });

  it("never fires a server call for a disabled vertex", async () => {
    const calls: string[] = [];
    globalThis.fetch = mockFetch((path) => {
      calls.push(path);
      return { status: 200, payload: fakeState() };
    });
    const ctl = new ExplorerController(new ApiClient());
    await ctl.refresh();
    calls.length = 0;

    // enabled vertex goes through
    await ctl.clickVertex([1, 3]);
    expect(calls).toEqual(["/api/mutate"]);

    // unknown / frozen vertex is a no-op: affordance soundness
    calls.length = 0;
    await ctl.clickVertex([1, 2]);
    expect(calls).toEqual([]);

    // orbit mode: the orbit of 1,3 is marked not mutable
    ctl.setMode("orbitMutate");
    await ctl.clickVertex([1, 3]);
    expect(calls).toEqual([]);
  });

  it("surfaces server errors as toasts with the module error name", async () => {
    let first = true;
    globalThis.fetch = mockFetch((path) => {
      if (path === "/api/mutate" && !first) {
        return { status: 400, payload: { error: "NotMutable", message: "valency 6" } };
      }
      first = path !== "/api/state" ? first : false;
      return { status: 200, payload: fakeState() };
    });
    const ctl = new ExplorerController(new ApiClient());
    await ctl.refresh();
    await ctl.forceMutate([1, 4, 7]);
    expect(ctl.toasts.at(-1)).toEqual({ error: "NotMutable", message: "valency 6" });
  });

  it("toggles cut arrows in cutEdit mode via /api/cut", async () => {
    const posted: number[][] = [];
    globalThis.fetch = mockFetch((path, body) => {
      if (path === "/api/cut") {
        const arrows = (body as { arrows: number[] }).arrows;
        posted.push(arrows);
        return {
          status: 200,
          payload: fakeState({
            cut: { arrows, valid: false, homogeneous: false, strictVertices: [] },
          }),
        };
      }
      return { status: 200, payload: fakeState() };
    });
    const ctl = new ExplorerController(new ApiClient());
    await ctl.refresh();
    ctl.setMode("cutEdit");
    await ctl.clickArrow(0);
    expect(posted).toEqual([[0]]);
    await ctl.clickArrow(0); // toggle off
    expect(posted).toEqual([[0], []]);
  });

  it("keeps requests serialized (single in-flight)", async () => {
    let inFlight = 0;
    let maxInFlight = 0;
    globalThis.fetch = vi.fn(async () => {
      inFlight += 1;
      maxInFlight = Math.max(maxInFlight, inFlight);
      await new Promise((r) => setTimeout(r, 5));
      inFlight -= 1;
      return {
        ok: true,
        status: 200,
        json: async () => fakeState(),
      } as Response;
    });
    const ctl = new ExplorerController(new ApiClient());
    const jobs = [ctl.refresh(), ctl.refresh(), ctl.refresh()];
    await Promise.all(jobs);
    expect(maxInFlight).toBe(1);
  });
});
