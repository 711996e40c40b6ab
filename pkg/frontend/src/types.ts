// Payload shapes of the node's HTTP/JSON API. The dashboard holds no state
// of its own: everything rendered is reconstructible from these responses.

export interface DonorData {
  age: number;
  blood_type: string;
  donor_id: string;
  name: string;
}

export interface RecipientData {
  age: number;
  blood_type: string;
  name: string;
  recipient_id: string;
}

export interface LocationData {
  label: string;
  latitude: number;
  longitude: number;
  recorded_at: string;
}

export type MetricValue = number | string | null;

export interface TransactionData {
  donor: DonorData;
  location: LocationData;
  metrics: Record<string, MetricValue>;
  recipient: RecipientData;
  red_flag: boolean;
  signature: string;
  submitter_pubkey: string;
  tx_id: string;
  viability: number | null;
}

export interface BlockData {
  index: number;
  previous_hash: string;
  proof: number;
  timestamp: string;
  transactions: TransactionData[];
}

export interface ChainPayload {
  blocks: BlockData[];
  difficulty: number;
  length: number;
}

export interface AlertEntry {
  block_index: number | null;
  location: LocationData;
  recorded_at: string;
  tx_id: string;
  viability: number | null;
}

export interface AlertsPayload {
  alerts: AlertEntry[];
}

export interface HealthPayload {
  chain_length: number;
  mempool: number;
  node: string;
  peers: number;
}

export interface SubmitReceipt {
  next_block_index: number;
  red_flag: boolean;
  tx_id: string;
  viability: number;
}

export interface ApiError {
  detail: string;
  error: string;
}
