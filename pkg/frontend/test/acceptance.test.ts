// The dashboard's acceptance checks:
//  1. a newly mined red-flag transaction reaches the alert banner within
//     4 s at the default 2 s polling interval,
//  2. the degraded banner appears within two polling intervals of the node
//     going away, with the cached ledger view retained,
//  3. the explorer view renders offline from snapshotted API responses.

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import type { ConnectionState, NodeReader } from "../src/poller.js";
import { DEFAULT_INTERVAL_MS, Poller } from "../src/poller.js";
import { renderAlertBanner, renderApp, renderConnection } from "../src/render.js";
import { buildViewModel, type ViewModel } from "../src/viewmodel.js";
import { ALERTS_SNAPSHOT, CHAIN_SNAPSHOT, HEALTH_SNAPSHOT } from "./snapshots.js";

describe("dashboard acceptance", () => {
  beforeEach(() => {
    vi.useFakeTimers();
    vi.setSystemTime(0);
  });
  afterEach(() => {
    vi.useRealTimers();
  });

  it("shows the alert banner within 4s of a red-flag transaction being mined", async () => {
    const MINED_AT = 1000;
    const reader: NodeReader = {
      chain: async () =>
        Date.now() < MINED_AT
          ? { ...CHAIN_SNAPSHOT, length: 1, blocks: CHAIN_SNAPSHOT.blocks.slice(0, 1) }
          : CHAIN_SNAPSHOT,
      alerts: async () => (Date.now() < MINED_AT ? { alerts: [] } : ALERTS_SNAPSHOT),
      health: async () => HEALTH_SNAPSHOT,
    };
    let bannerShownAt: number | null = null;
    const poller = new Poller(
      reader,
      {
        onUpdate(vm: ViewModel) {
          const banner = renderAlertBanner(vm.alerts);
          if (bannerShownAt === null && banner.includes("RED FLAG")) {
            bannerShownAt = Date.now();
          }
        },
        onState() {},
      },
      DEFAULT_INTERVAL_MS,
    );
    poller.start();
    await vi.advanceTimersByTimeAsync(1); // first poll: nothing flagged yet
    expect(bannerShownAt).toBeNull();
    await vi.advanceTimersByTimeAsync(6000);
    poller.stop();
    expect(bannerShownAt).not.toBeNull();
    expect(bannerShownAt! - MINED_AT).toBeLessThanOrEqual(4000);
  });

  it("shows the degraded banner within two polling intervals of node shutdown", async () => {
    let shutdownAt: number | null = null;
    const reader: NodeReader = {
      chain: async () => {
        if (shutdownAt !== null && Date.now() >= shutdownAt) throw new Error("refused");
        return CHAIN_SNAPSHOT;
      },
      alerts: async () => ALERTS_SNAPSHOT,
      health: async () => HEALTH_SNAPSHOT,
    };
    const states: Array<{ at: number; state: ConnectionState }> = [];
    let lastVm: ViewModel | null = null;
    const poller = new Poller(
      reader,
      {
        onUpdate(vm) {
          lastVm = vm;
        },
        onState(state) {
          states.push({ at: Date.now(), state });
        },
      },
      DEFAULT_INTERVAL_MS,
    );
    poller.start();
    await vi.advanceTimersByTimeAsync(1);
    shutdownAt = 1000;
    await vi.advanceTimersByTimeAsync(8000);
    poller.stop();

    const degraded = states.find((s) => s.state.kind === "degraded");
    expect(degraded).toBeDefined();
    expect(degraded!.at - shutdownAt).toBeLessThanOrEqual(2 * DEFAULT_INTERVAL_MS + 1000);
    // cached view retained and the banner says so, never a blank page
    expect(lastVm).not.toBeNull();
    const banner = renderConnection(degraded!.state);
    expect(banner).toContain("DEGRADED");
    expect(banner).toContain("cached ledger view");
  });

  it("renders the explorer view offline from snapshotted API fixtures", () => {
    const vm = buildViewModel(CHAIN_SNAPSHOT, ALERTS_SNAPSHOT, HEALTH_SNAPSHOT);
    const html = renderApp(vm, { kind: "live", lastSuccess: 0 });

    // explorer: every block with its hash prefix and transaction count
    expect(html).toContain("chain &middot; length 3");
    expect(html).toContain("block 0");
    expect(html).toContain("block 1");
    expect(html).toContain("block 2");
    for (const block of CHAIN_SNAPSHOT.blocks) {
      expect(html).toContain(block.previous_hash.slice(0, 12));
      expect(html).toContain(`${block.transactions.length} tx`);
    }
    // shipment timelines for both donor/recipient pairs
    expect(html).toContain("D-1001");
    expect(html).toContain("R-2417");
    expect(html).toContain("D-1002");
    expect(html).toContain("R-3090");
    expect(html).toContain("DEN airfield, leg 3");
    // gauge and alert banner reflect the red-flag shipment
    expect(html).toContain("RED FLAG");
    expect(html).toContain("viability 0.000000");
    expect(html).toContain("1.000000");
  });
});
