// Scripted end-to-end session against a live `icequiver serve`.
//
// loads the symmetric (3,9) collection, clicks 134 (state gains 245),
// clicks 147 (NotMutable surfaced), paints the reference 4-arrow cut
// (valid, non-homogeneous), cut-mutates at 457 (homogeneous).
import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { ApiClient } from "../src/api.js";
import { ExplorerController } from "../src/controller.js";
import { labelKey } from "../src/types.js";

const PORT = 8891;
const BASE = `http://127.0.0.1:${PORT}`;

const REFERENCE_LABELS: number[][] = [
  [7, 8, 9], [1, 8, 9], [1, 2, 9], [1, 2, 3], [2, 3, 4], [3, 4, 5],
  [4, 5, 6], [5, 6, 7], [6, 7, 8],
  [1, 7, 9], [1, 3, 4], [4, 6, 7], [1, 7, 8], [1, 2, 4], [4, 5, 7],
  [1, 4, 7], [1, 2, 7], [1, 4, 5], [4, 7, 8],
];

const REFERENCE_CUT: [number[], number[]][] = [
  [[4, 5, 7], [1, 4, 5]],
  [[4, 5, 7], [4, 6, 7]],
  [[1, 4, 7], [1, 7, 8]],
  [[1, 4, 7], [1, 2, 4]],
];

let server: ChildProcess;

async function waitForServer(): Promise<void> {
  for (let i = 0; i < 100; i += 1) {
    try {
      const resp = await fetch(`${BASE}/api/state?token=probe`);
      if (resp.status < 500) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  throw new Error("server did not come up");
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "icequiver.cli", "serve", "--port", String(PORT)], {
    stdio: "ignore",
  });
  await waitForServer();
}, 30_000);

afterAll(() => {
  server.kill();
});

describe("explorer end-to-end", () => {
  const ctl = new ExplorerController(new ApiClient(BASE, "e2e"));

  it("loads the symmetric (3,9) collection", async () => {
    await ctl.load({ k: 3, n: 9, labels: REFERENCE_LABELS });
    expect(ctl.state?.report.selfInjective).toBe(true);
    expect(ctl.state?.report.symmetric).toBe(true);
    expect(ctl.state?.quiver.arrows.length).toBe(36);
    // 9 frozen vertices sit on the boundary circle
    expect(ctl.state?.quiver.vertices.filter((v) => v.frozen).length).toBe(9);
  });

  it("clicking 134 in mutate mode swaps in 245", async () => {
    ctl.setMode("mutate");
    expect(ctl.vertexEnabled([1, 3, 4])).toBe(true);
    await ctl.clickVertex([1, 3, 4]);
    const labels = ctl.state!.collection.labels.map((l) => labelKey(l));
    expect(labels).toContain("2,4,5");
    expect(labels).not.toContain("1,3,4");
    expect(ctl.state?.report.selfInjective).toBe(false);
  });

  it("clicking 147 surfaces NotMutable", async () => {
    // back to the symmetric state first
    await ctl.undo();
    expect(ctl.vertexEnabled([1, 4, 7])).toBe(false); // valency 6: disabled
    const before = ctl.api.log.length;
    await ctl.clickVertex([1, 4, 7]); // affordance-sound: no request fires
    expect(ctl.api.log.length).toBe(before);
    // force the request anyway: the server answers with the module error
    await ctl.forceMutate([1, 4, 7]);
    expect(ctl.toasts.at(-1)?.error).toBe("NotMutable");
  });

  it("painting the reference cut reports valid and non-homogeneous", async () => {
    const arrows = ctl.state!.quiver.arrows;
    const ids = REFERENCE_CUT.map(([src, tgt]) => {
      const arrow = arrows.find(
        (a) => labelKey(a.src) === labelKey(src) && labelKey(a.tgt) === labelKey(tgt),
      );
      expect(arrow).toBeDefined();
      return arrow!.id;
    });
    ctl.setMode("cutEdit");
    await ctl.paintCut(ids);
    expect(ctl.state?.cut?.valid).toBe(true);
    expect(ctl.state?.cut?.homogeneous).toBe(false);
  });

  it("cut-mutating at 457 yields the homogeneous cut", async () => {
    expect(ctl.vertexEnabled([4, 5, 7])).toBe(true); // strict vertex for this cut
    await ctl.clickVertex([4, 5, 7]);
    expect(ctl.state?.cut?.valid).toBe(true);
    expect(ctl.state?.cut?.homogeneous).toBe(true);
    expect(ctl.state?.cut?.arrows.length).toBe(3);
  });

  it("every displayed fact originated from a server response", () => {
    // the request log covers all transitions used above
    const paths = ctl.api.log.map((e) => e.path);
    for (const p of ["/api/load", "/api/mutate", "/api/undo", "/api/cut", "/api/cut-mutate"]) {
      expect(paths).toContain(p);
    }
    // and nothing was rendered without a fetch: the state object is
    // referentially the last parsed response (no local mutation)
    expect(ctl.state).not.toBeNull();
  });
});
