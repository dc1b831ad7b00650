import { vi } from "vitest";
import {
  GlobalRankingResponse,
  ModelSummaryResponse,
  PredictResponse,
} from "../src/types.js";

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export const MODEL_SUMMARY: ModelSummaryResponse = {
  format_version: 1,
  service_version: "0.1.0",
  vocabulary_size: 120,
  ngram_range: [1, 3],
  n_training_docs: 200,
  train_config: { seed: 0 },
  metrics: { test: { mae: 1.2 } },
  model_hash: "aaaabbbbccccdddd",
  disclaimer: "test disclaimer",
};

export function predictResponse(
  overrides: Partial<PredictResponse> = {},
): PredictResponse {
  const base: PredictResponse = {
    predicted_months: 67.3,
    predicted_display: "67.3 months (5 years 7.3 months)",
    out_of_range: false,
    intercept: 60.0,
    contributions: [
      { phrase: "wounding", tfidf: 0.4, weight: 10.25, contribution: 4.1 },
      { phrase: "weapon", tfidf: 0.2, weight: 10.0, contribution: 2.0 },
      { phrase: "guilty plea", tfidf: 0.3, weight: -2.0, contribution: -0.6 },
      { phrase: "victim", tfidf: 0.3, weight: 6.0, contribution: 1.8 },
    ],
    contribution_total: 7.3,
    oov_note: false,
    model_hash: "model-one",
    disclaimer: "test disclaimer",
  };
  return { ...base, ...overrides };
}

export const GLOBAL_RANKING: GlobalRankingResponse = {
  top_positive: [
    { phrase: "wounding", adjusted_weight: 14.2, raw_weight: 7.1, doc_freq_ratio: 0.4 },
    { phrase: "weapon", adjusted_weight: 9.9, raw_weight: 5.0, doc_freq_ratio: 0.25 },
  ],
  top_negative: [
    { phrase: "guilty plea", adjusted_weight: -6.3, raw_weight: -3.0, doc_freq_ratio: 0.6 },
  ],
  k: 25,
  model_hash: "model-one",
  disclaimer: "test disclaimer",
};

export interface FakeService {
  fetchFn: ReturnType<typeof vi.fn>;
  predictCalls(): Array<{ url: string; body: { text: string } }>;
}

// Canned-response fetch: predict replies come from a queue (last entry
// repeats), the fixed routes always succeed.
export function cannedFetch(queue: PredictResponse[]): FakeService {
  let i = 0;
  const fetchFn = vi.fn((url: string, init?: RequestInit) => {
    if (url === "/api/v1/model") {
      return Promise.resolve(jsonResponse(MODEL_SUMMARY));
    }
    if (url.startsWith("/api/v1/explain/global")) {
      return Promise.resolve(jsonResponse(GLOBAL_RANKING));
    }
    if (url === "/api/v1/predict") {
      const resp = queue[Math.min(i, queue.length - 1)];
      i += 1;
      void init;
      return Promise.resolve(jsonResponse(resp));
    }
    return Promise.resolve(jsonResponse({ detail: "not found" }, 404));
  });
  return {
    fetchFn,
    predictCalls: () =>
      fetchFn.mock.calls
        .filter(([url]) => url === "/api/v1/predict")
        .map(([url, init]) => ({
          url: url as string,
          body: JSON.parse((init as RequestInit).body as string),
        })),
  };
}

export function typeInto(textarea: HTMLTextAreaElement, text: string): void {
  textarea.value = text;
  textarea.dispatchEvent(new Event("input"));
}

// A root that is actually in the document: detached elements do not get
// default click behavior (change events) in the test DOM.
export function mountRoot(): HTMLElement {
  const root = document.createElement("div");
  document.body.append(root);
  return root;
}
