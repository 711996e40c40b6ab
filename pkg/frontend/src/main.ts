import { NodeClient } from "./client.js";
import { DISEASED_READING, HEALTHY_READING } from "./fixtures.js";
import { renderOutcome, submitReading } from "./form.js";
import { Poller, type ConnectionState } from "./poller.js";
import { renderApp } from "./render.js";
import type { ViewModel } from "./viewmodel.js";

// DOM wiring only; everything interesting lives in the pure modules.

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

let poller: Poller | null = null;
let lastVm: ViewModel | null = null;
let lastState: ConnectionState = { kind: "connecting" };
let client: NodeClient | null = null;

function repaint(): void {
  const root = el<HTMLDivElement>("app");
  if (lastVm === null) {
    // never blank: before the first response only the state line shows
    root.innerHTML = renderApp(
      {
        alerts: [],
        chain: { difficulty: 0, length: 0, latestBlocks: [] },
        health: { chain_length: 0, mempool: 0, node: "(waiting)", peers: 0 },
        shipments: [],
      },
      lastState,
    );
    return;
  }
  root.innerHTML = renderApp(lastVm, lastState);
}

function connect(): void {
  const address = el<HTMLInputElement>("node-address").value.trim();
  if (!address) return;
  poller?.stop();
  client = new NodeClient(address);
  poller = new Poller(client, {
    onUpdate(vm) {
      lastVm = vm;
      repaint();
    },
    onState(state) {
      lastState = state;
      repaint();
    },
  });
  poller.start();
}

async function onSubmit(): Promise<void> {
  const receiptBox = el<HTMLDivElement>("receipt");
  if (!client) {
    receiptBox.innerHTML = '<div class="receipt bad">connect to a node first</div>';
    return;
  }
  const raw = el<HTMLTextAreaElement>("tx-json").value;
  receiptBox.innerHTML = '<div class="receipt">submitting&hellip;</div>';
  const outcome = await submitReading(client, raw);
  receiptBox.innerHTML = renderOutcome(outcome);
}

function loadFixture(which: "healthy" | "diseased"): void {
  const tx = which === "healthy" ? HEALTHY_READING : DISEASED_READING;
  el<HTMLTextAreaElement>("tx-json").value = JSON.stringify(tx, null, 2);
}

el<HTMLButtonElement>("connect").addEventListener("click", connect);
el<HTMLButtonElement>("submit-tx").addEventListener("click", () => void onSubmit());
el<HTMLButtonElement>("load-healthy").addEventListener("click", () => loadFixture("healthy"));
el<HTMLButtonElement>("load-diseased").addEventListener("click", () => loadFixture("diseased"));
el<HTMLInputElement>("node-address").addEventListener("keydown", (event) => {
  if ((event as KeyboardEvent).key === "Enter") connect();
});
repaint();
