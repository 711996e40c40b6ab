import type {
  AlertsPayload,
  ApiError,
  ChainPayload,
  HealthPayload,
  SubmitReceipt,
  TransactionData,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class SubmitRejected extends Error {
  constructor(public readonly body: ApiError) {
    super(`${body.error}: ${body.detail}`);
  }
}

/** Read-mostly client for one node; the only write path is /transactions. */
export class NodeClient {
  constructor(
    public readonly address: string,
    private readonly fetchImpl: FetchLike = (...args) => fetch(...args),
  ) {}

  private url(path: string): string {
    return `http://${this.address}${path}`;
  }

  private async getJson<T>(path: string): Promise<T> {
    const resp = await this.fetchImpl(this.url(path));
    if (!resp.ok) {
      throw new Error(`${path} answered ${resp.status}`);
    }
    return (await resp.json()) as T;
  }

  chain(): Promise<ChainPayload> {
    return this.getJson<ChainPayload>("/chain");
  }

  alerts(since?: number): Promise<AlertsPayload> {
    const suffix = since === undefined ? "" : `?since=${since}`;
    return this.getJson<AlertsPayload>(`/alerts${suffix}`);
  }

  health(): Promise<HealthPayload> {
    return this.getJson<HealthPayload>("/health");
  }

  async submitTransaction(tx: TransactionData): Promise<SubmitReceipt> {
    const resp = await this.fetchImpl(this.url("/transactions"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ transaction: tx }),
    });
    if (resp.status === 201) {
      return (await resp.json()) as SubmitReceipt;
    }
    let body: ApiError;
    try {
      body = (await resp.json()) as ApiError;
    } catch {
      body = { error: "HttpError", detail: `node answered ${resp.status}` };
    }
    throw new SubmitRejected(body);
  }
}
