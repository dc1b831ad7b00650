import {
  GlobalRankingResponse,
  ModelSummaryResponse,
  PredictResponse,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
    this.name = "ApiError";
  }
}

async function detailOf(res: Response): Promise<string> {
  try {
    const body = await res.json();
    if (body && typeof body.detail === "string") return body.detail;
  } catch {
    // non-JSON error body; fall through to the generic message
  }
  return `request failed with status ${res.status}`;
}

export class Api {
  constructor(private readonly fetchFn: FetchLike = (...a) => fetch(...a)) {}

  async predict(text: string): Promise<PredictResponse> {
    const res = await this.fetchFn("/api/v1/predict", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text }),
    });
    if (!res.ok) throw new ApiError(res.status, await detailOf(res));
    return res.json();
  }

  async explainGlobal(k: number): Promise<GlobalRankingResponse> {
    const res = await this.fetchFn(`/api/v1/explain/global?k=${k}`);
    if (!res.ok) throw new ApiError(res.status, await detailOf(res));
    return res.json();
  }

  async modelSummary(): Promise<ModelSummaryResponse> {
    const res = await this.fetchFn("/api/v1/model");
    if (!res.ok) throw new ApiError(res.status, await detailOf(res));
    return res.json();
  }
}
