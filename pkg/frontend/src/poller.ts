import type { AlertsPayload, ChainPayload, HealthPayload } from "./types.js";
import { buildViewModel, type ViewModel } from "./viewmodel.js";

/** The read-only slice of NodeClient the poller needs. */
export interface NodeReader {
  chain(): Promise<ChainPayload>;
  alerts(since?: number): Promise<AlertsPayload>;
  health(): Promise<HealthPayload>;
}

export const DEFAULT_INTERVAL_MS = 2000;
const DEGRADED_AFTER_FAILURES = 2;

export type ConnectionState =
  | { kind: "connecting" }
  | { kind: "live"; lastSuccess: number }
  | { kind: "degraded"; lastSuccess: number | null; failures: number };

export interface PollerCallbacks {
  onUpdate(vm: ViewModel): void;
  onState(state: ConnectionState): void;
}

/**
 * Polls /chain, /alerts, and /health on a fixed interval.
 *
 * Responses carry a monotonic sequence number taken at request time; a
 * response older than the newest applied one is discarded, so overlapping
 * polls cannot roll the view backwards. Failures never blank the page:
 * the last good view model stays up and the state turns degraded after
 * two consecutive misses, carrying the last-success timestamp.
 */
export class Poller {
  private seq = 0;
  private applied = 0;
  private failures = 0;
  private timer: ReturnType<typeof setInterval> | null = null;
  lastSuccess: number | null = null;

  constructor(
    private readonly client: NodeReader,
    private readonly callbacks: PollerCallbacks,
    private readonly intervalMs: number = DEFAULT_INTERVAL_MS,
    private readonly now: () => number = () => Date.now(),
  ) {}

  start(): void {
    this.callbacks.onState({ kind: "connecting" });
    void this.tick();
    this.timer = setInterval(() => void this.tick(), this.intervalMs);
  }

  stop(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }

  async tick(): Promise<void> {
    const seq = ++this.seq;
    try {
      const [chain, alerts, health] = await Promise.all([
        this.client.chain(),
        this.client.alerts(),
        this.client.health(),
      ]);
      if (seq <= this.applied) return; // a newer response already landed
      this.applied = seq;
      this.failures = 0;
      this.lastSuccess = this.now();
      this.callbacks.onUpdate(buildViewModel(chain, alerts, health));
      this.callbacks.onState({ kind: "live", lastSuccess: this.lastSuccess });
    } catch {
      if (seq <= this.applied) return; // stale failure, view already newer
      this.failures += 1;
      if (this.failures >= DEGRADED_AFTER_FAILURES) {
        this.callbacks.onState({
          kind: "degraded",
          lastSuccess: this.lastSuccess,
          failures: this.failures,
        });
      }
    }
  }
}
