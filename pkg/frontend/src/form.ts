import { SubmitRejected } from "./client.js";
import { escapeHtml } from "./render.js";
import type { SubmitReceipt, TransactionData } from "./types.js";
import { validateTransactionForm, type FieldError } from "./validate.js";

/** The write-side slice of NodeClient the form needs. */
export interface TransactionSink {
  submitTransaction(tx: TransactionData): Promise<SubmitReceipt>;
}

export type SubmitOutcome =
  | { kind: "invalid"; errors: FieldError[] }
  | { kind: "accepted"; receipt: SubmitReceipt }
  | { kind: "rejected"; error: string; detail: string }
  | { kind: "unreachable"; detail: string };

/**
 * Validate and submit one signed transaction. Validation failures stop the
 * flow before any request leaves the browser.
 */
export async function submitReading(
  client: TransactionSink,
  raw: string,
): Promise<SubmitOutcome> {
  let parsed: unknown;
  try {
    parsed = JSON.parse(raw);
  } catch (exc) {
    return {
      kind: "invalid",
      errors: [{ field: "transaction", message: `not valid JSON: ${String(exc)}` }],
    };
  }
  const errors = validateTransactionForm(parsed);
  if (errors.length > 0) {
    return { kind: "invalid", errors };
  }
  try {
    const receipt = await client.submitTransaction(parsed as TransactionData);
    return { kind: "accepted", receipt };
  } catch (exc) {
    if (exc instanceof SubmitRejected) {
      return { kind: "rejected", error: exc.body.error, detail: exc.body.detail };
    }
    return { kind: "unreachable", detail: String(exc) };
  }
}

export function renderOutcome(outcome: SubmitOutcome): string {
  switch (outcome.kind) {
    case "invalid": {
      const rows = outcome.errors
        .map((e) => `<li><b>${escapeHtml(e.field)}</b>: ${escapeHtml(e.message)}</li>`)
        .join("");
      return `<div class="receipt bad"><p>not submitted:</p><ul>${rows}</ul></div>`;
    }
    case "rejected":
      return (
        `<div class="receipt bad">node rejected the transaction &mdash; ` +
        `<b>${escapeHtml(outcome.error)}</b>: ${escapeHtml(outcome.detail)}</div>`
      );
    case "unreachable":
      return `<div class="receipt bad">node unreachable: ${escapeHtml(outcome.detail)}</div>`;
    case "accepted": {
      const r = outcome.receipt;
      const advisory = r.red_flag
        ? '<p class="stop">&#9888; RED FLAG &mdash; viability below threshold. ' +
          "Advise halting transport pending operator review.</p>"
        : "";
      return (
        `<div class="receipt ${r.red_flag ? "bad" : "good"}">` +
        `accepted into block ${r.next_block_index} &middot; ` +
        `<code>${r.tx_id.slice(0, 16)}&hellip;</code> &middot; ` +
        `viability ${r.viability.toFixed(6)} &middot; red_flag ${r.red_flag}` +
        `${advisory}</div>`
      );
    }
  }
}
