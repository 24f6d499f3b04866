/**
 * End-to-end flow against the real `clusterlab serve` process: build the
 * SL_3 double Bruhat seed via the form logic, mutate vertex 1 twice and
 * compare displayed checksums, then undo three mutations and check each
 * restored JSON byte-for-byte.
 */

import { ChildProcess, spawn } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { checksumOf } from "../src/checksum";
import { ViewState } from "../src/state";
import { quiverFromSeed } from "../src/quiver";

const PORT = 8899 + Math.floor(Math.random() * 500);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForHealth(client: ApiClient, tries = 60): Promise<void> {
  for (let i = 0; i < tries; i++) {
    try {
      if ((await client.health()) === "ok") return;
    } catch {
      await new Promise((r) => setTimeout(r, 250));
    }
  }
  throw new Error("clusterlab serve did not come up");
}

beforeAll(async () => {
  server = spawn("python3", ["-m", "clusterlab.cli", "serve", "--port", String(PORT)], {
    stdio: "ignore",
  });
  await waitForHealth(new ApiClient(BASE));
}, 30000);

afterAll(() => {
  server.kill();
});

describe("explorer against a live server", () => {
  it("runs the build / mutate twice / checksum / undo flow", async () => {
    const state = new ViewState(new ApiClient(BASE));
    const built = await state.buildBruhat("1,2,1,-1,-2,-1", 2);
    expect(built).toBe(true);
    expect(state.seed!.n).toBe(8);
    expect(state.seed!.m).toBe(4);

    // coefficients highlighted: the four frozen vertices are exactly the
    // minors of the non-vanishing conditions
    const quiver = quiverFromSeed(state.seed!);
    const frozen = quiver.vertices.filter((v) => v.frozen).map((v) => v.label);
    expect(frozen.sort()).toEqual(["D[12|23]", "D[1|3]", "D[23|12]", "D[3|1]"].sort());

    const initialDisplay = state.displayChecksum();
    const initialFull = checksumOf(state.seed);

    await state.mutateAt(1);
    expect(state.displayChecksum()).not.toBe(initialDisplay);
    await state.mutateAt(1);
    // involution: displayed seed (B, labels, variables) returns exactly
    expect(state.displayChecksum()).toBe(initialDisplay);

    // undo twice: byte-exact earlier JSONs including history
    const afterOne = state.trail[state.trail.length - 1];
    await state.undo();
    expect(checksumOf(state.seed)).toBe(checksumOf(afterOne));
    await state.undo();
    expect(checksumOf(state.seed)).toBe(initialFull);
  }, 30000);

  it("restores exact prior JSON through undo depth 3", async () => {
    const state = new ViewState(new ApiClient(BASE));
    await state.buildBruhat("1,2,1,-1,-2,-1", 2);
    const snapshots = [checksumOf(state.seed)];
    for (const k of [1, 2, 3]) {
      await state.mutateAt(k);
      snapshots.push(checksumOf(state.seed));
    }
    for (let back = snapshots.length - 2; back >= 0; back--) {
      const ok = await state.undo();
      expect(ok).toBe(true);
      expect(checksumOf(state.seed)).toBe(snapshots[back]);
    }
  }, 30000);

  it("frozen vertices never reach the server", async () => {
    const state = new ViewState(new ApiClient(BASE));
    await state.buildBruhat("1,2,1,-1,-2,-1", 2);
    const before = checksumOf(state.seed);
    const ok = await state.mutateAt(7); // a frozen vertex
    expect(ok).toBe(false);
    expect(state.hint).toContain("frozen");
    expect(checksumOf(state.seed)).toBe(before);
  });

  it("server rejects non-reduced words; the form surfaces the error", async () => {
    const state = new ViewState(new ApiClient(BASE));
    const ok = await state.buildBruhat("1,1", 2);
    expect(ok).toBe(false);
    expect(state.validationError.length).toBeGreaterThan(0);
  });

  it("loads strata for a bruhat session", async () => {
    const state = new ViewState(new ApiClient(BASE));
    await state.buildBruhat("1,2,1,-1,-2,-1", 2);
    const ok = await state.loadStrata();
    expect(ok).toBe(true);
    expect(state.strata).toHaveLength(256); // 2^8 subsets
  });

  it("classical session upload works end to end", async () => {
    const client = new ApiClient(BASE);
    const a2 = {
      m: 2,
      n: 2,
      B: [
        [0, 1],
        [-1, 0],
      ],
      labels: ["x1", "x2"],
      variables: [
        [{ exp: [1, 0], num: 1, den: 1 }],
        [{ exp: [0, 1], num: 1, den: 1 }],
      ],
      history: [],
    };
    const state = new ViewState(client);
    await state.loadSeed(a2);
    await state.mutateAt(1);
    expect(state.seed!.variables[0]).toEqual([
      { exp: [-1, 0], num: 1, den: 1 },
      { exp: [-1, 1], num: 1, den: 1 },
    ]);
  });
});
