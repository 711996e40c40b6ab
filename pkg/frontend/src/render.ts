import type { AlertEntry } from "./types.js";
import type { ConnectionState } from "./poller.js";
import type { ChainSummary, ShipmentTimeline, ViewModel } from "./viewmodel.js";
import { clampViability } from "./viewmodel.js";

// Pure HTML-string renderers: everything displayed comes straight out of a
// ViewModel, so the whole console can be rendered offline from snapshotted
// API responses.

export function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;")
    .replaceAll("'", "&#39;");
}

function viabilityText(value: number | null): string {
  return value === null ? "unscored" : value.toFixed(6);
}

export function renderGauge(value: number | null): string {
  const v = clampViability(value);
  if (v === null) {
    return '<div class="gauge empty">unscored</div>';
  }
  const pct = Math.round(v * 100);
  const tone = v < 0.5 ? "bad" : v < 0.8 ? "warn" : "good";
  return (
    `<div class="gauge ${tone}" role="meter" aria-valuenow="${v.toFixed(6)}">` +
    `<div class="gauge-fill" style="width:${pct}%"></div>` +
    `<span class="gauge-label">${v.toFixed(6)}</span></div>`
  );
}

export function renderAlertBanner(alerts: AlertEntry[]): string {
  if (alerts.length === 0) {
    return '<div id="alert-banner" class="banner ok">no red flags on the ledger</div>';
  }
  const latest = alerts[alerts.length - 1];
  const where = latest.block_index === null ? "pending" : `block ${latest.block_index}`;
  return (
    `<div id="alert-banner" class="banner red">RED FLAG &#9888; ${alerts.length} ` +
    `transaction${alerts.length > 1 ? "s" : ""} below threshold &mdash; latest in ${where}, ` +
    `viability ${viabilityText(latest.viability)}, at ${escapeHtml(latest.location.label)}. ` +
    `Advise halting transport pending operator review.</div>`
  );
}

export function renderConnection(state: ConnectionState): string {
  if (state.kind === "connecting") {
    return '<div id="conn" class="banner neutral">connecting&hellip;</div>';
  }
  if (state.kind === "live") {
    return (
      `<div id="conn" class="conn live"><span class="dot live"></span>` +
      `live &middot; last update ${new Date(state.lastSuccess).toISOString()}</div>`
    );
  }
  const since =
    state.lastSuccess === null
      ? "never reached"
      : `last success ${new Date(state.lastSuccess).toISOString()}`;
  return (
    `<div id="conn" class="banner degraded">DEGRADED &mdash; node unreachable ` +
    `(${state.failures} missed polls, ${since}); showing cached ledger view</div>`
  );
}

export function renderChainExplorer(chain: ChainSummary): string {
  const rows = chain.latestBlocks
    .map((block) => {
      const txs = block.transactions
        .map(
          (tx) =>
            `<li class="tx${tx.red_flag ? " flagged" : ""}">` +
            `<code>${tx.tx_id.slice(0, 12)}&hellip;</code> ` +
            `${escapeHtml(tx.donor.donor_id)} &rarr; ${escapeHtml(tx.recipient.recipient_id)} ` +
            `&middot; viability ${viabilityText(tx.viability)}` +
            `${tx.red_flag ? ' <span class="flag">RED FLAG</span>' : ""}</li>`,
        )
        .join("");
      return (
        `<article class="block" id="block-${block.index}">` +
        `<header>block ${block.index} &middot; ${block.timestamp} &middot; ` +
        `proof ${block.proof} &middot; prev <code>${block.previous_hash.slice(0, 12)}&hellip;</code> ` +
        `&middot; ${block.transactions.length} tx</header>` +
        (txs ? `<ul>${txs}</ul>` : '<p class="muted">no transactions</p>') +
        `</article>`
      );
    })
    .join("");
  return (
    `<section id="explorer"><h2>chain &middot; length ${chain.length} &middot; ` +
    `difficulty ${chain.difficulty}</h2>${rows}</section>`
  );
}

export function renderShipments(shipments: ShipmentTimeline[]): string {
  if (shipments.length === 0) {
    return '<section id="shipments"><h2>shipments</h2><p class="muted">none yet</p></section>';
  }
  const cards = shipments
    .map((s) => {
      const steps = s.events
        .map(
          (e) =>
            `<li class="step${e.redFlag ? " flagged" : ""}">` +
            `block ${e.blockIndex} &middot; ${e.recordedAt} &middot; ` +
            `${escapeHtml(e.label)} (${e.latitude.toFixed(4)}, ${e.longitude.toFixed(4)}) ` +
            `&middot; viability ${viabilityText(e.viability)}</li>`,
        )
        .join("");
      return (
        `<article class="shipment${s.redFlagged ? " flagged" : ""}">` +
        `<header>${escapeHtml(s.donorName)} (${escapeHtml(s.donorId)}) &rarr; ` +
        `${escapeHtml(s.recipientName)} (${escapeHtml(s.recipientId)}) ` +
        `&middot; ${escapeHtml(s.bloodType)}</header>` +
        renderGauge(s.latestViability) +
        `<ol class="timeline">${steps}</ol></article>`
      );
    })
    .join("");
  return `<section id="shipments"><h2>shipments</h2>${cards}</section>`;
}

export function renderAlertFeed(alerts: AlertEntry[]): string {
  if (alerts.length === 0) {
    return '<section id="alert-feed"><h2>alerts</h2><p class="muted">none</p></section>';
  }
  const rows = alerts
    .map(
      (a) =>
        `<li>block ${a.block_index === null ? "&mdash; (pending)" : a.block_index} &middot; ` +
        `${a.recorded_at} &middot; <code>${a.tx_id.slice(0, 12)}&hellip;</code> &middot; ` +
        `viability ${viabilityText(a.viability)} &middot; ${escapeHtml(a.location.label)}</li>`,
    )
    .join("");
  return `<section id="alert-feed"><h2>alerts</h2><ul>${rows}</ul></section>`;
}

export function renderHealth(vm: ViewModel): string {
  const h = vm.health;
  return (
    `<section id="health">node <code>${escapeHtml(h.node)}</code> &middot; ` +
    `${h.peers} peers &middot; chain ${h.chain_length} &middot; mempool ${h.mempool}</section>`
  );
}

/** The whole console body for one view model + connection state. */
export function renderApp(vm: ViewModel, state: ConnectionState): string {
  return (
    renderConnection(state) +
    renderAlertBanner(vm.alerts) +
    renderHealth(vm) +
    renderShipments(vm.shipments) +
    renderChainExplorer(vm.chain) +
    renderAlertFeed(vm.alerts)
  );
}
