import type {
  AlertEntry,
  AlertsPayload,
  BlockData,
  ChainPayload,
  HealthPayload,
  TransactionData,
} from "./types.js";

export interface ShipmentEvent {
  blockIndex: number;
  label: string;
  latitude: number;
  longitude: number;
  recordedAt: string;
  redFlag: boolean;
  txId: string;
  viability: number | null;
}

export interface ShipmentTimeline {
  key: string;
  donorId: string;
  donorName: string;
  recipientId: string;
  recipientName: string;
  bloodType: string;
  events: ShipmentEvent[];
  latestViability: number | null;
  redFlagged: boolean;
}

export interface ChainSummary {
  difficulty: number;
  length: number;
  latestBlocks: BlockData[];
}

export interface ViewModel {
  alerts: AlertEntry[];
  chain: ChainSummary;
  health: HealthPayload;
  shipments: ShipmentTimeline[];
}

/** Keep a rendered probability inside [0, 1] no matter what arrived. */
export function clampViability(value: number | null): number | null {
  if (value === null) return null;
  return Math.min(1, Math.max(0, value));
}

function shipmentKey(tx: TransactionData): string {
  return `${tx.donor.donor_id} -> ${tx.recipient.recipient_id}`;
}

function compareAlerts(a: AlertEntry, b: AlertEntry): number {
  // block index first (pending entries last), recorded_at second
  const ai = a.block_index === null ? Number.POSITIVE_INFINITY : a.block_index;
  const bi = b.block_index === null ? Number.POSITIVE_INFINITY : b.block_index;
  if (ai !== bi) return ai - bi;
  return a.recorded_at < b.recorded_at ? -1 : a.recorded_at > b.recorded_at ? 1 : 0;
}

export function buildViewModel(
  chain: ChainPayload,
  alerts: AlertsPayload,
  health: HealthPayload,
  latestCount = 8,
): ViewModel {
  const shipments = new Map<string, ShipmentTimeline>();
  for (const block of chain.blocks) {
    for (const tx of block.transactions) {
      const key = shipmentKey(tx);
      let timeline = shipments.get(key);
      if (!timeline) {
        timeline = {
          key,
          donorId: tx.donor.donor_id,
          donorName: tx.donor.name,
          recipientId: tx.recipient.recipient_id,
          recipientName: tx.recipient.name,
          bloodType: tx.donor.blood_type,
          events: [],
          latestViability: null,
          redFlagged: false,
        };
        shipments.set(key, timeline);
      }
      timeline.events.push({
        blockIndex: block.index,
        label: tx.location.label,
        latitude: tx.location.latitude,
        longitude: tx.location.longitude,
        recordedAt: tx.location.recorded_at,
        redFlag: tx.red_flag,
        txId: tx.tx_id,
        viability: clampViability(tx.viability),
      });
    }
  }
  for (const timeline of shipments.values()) {
    timeline.events.sort((a, b) =>
      a.blockIndex !== b.blockIndex
        ? a.blockIndex - b.blockIndex
        : a.recordedAt < b.recordedAt ? -1 : a.recordedAt > b.recordedAt ? 1 : 0,
    );
    const last = timeline.events[timeline.events.length - 1];
    timeline.latestViability = last.viability;
    timeline.redFlagged = timeline.events.some((e) => e.redFlag);
  }
  return {
    alerts: [...alerts.alerts]
      .sort(compareAlerts)
      .map((a) => ({ ...a, viability: clampViability(a.viability) })),
    chain: {
      difficulty: chain.difficulty,
      length: chain.length,
      latestBlocks: chain.blocks.slice(-latestCount).reverse(),
    },
    health,
    shipments: [...shipments.values()].sort((a, b) => (a.key < b.key ? -1 : 1)),
  };
}
