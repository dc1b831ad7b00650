// JSON shapes returned by the prediction service. Field names match the
// wire format, so snake_case stays.

export interface ContributionOut {
  phrase: string;
  tfidf: number;
  weight: number;
  contribution: number;
}

export interface PredictResponse {
  predicted_months: number;
  predicted_display: string;
  out_of_range: boolean;
  intercept: number;
  contributions: ContributionOut[];
  contribution_total: number;
  oov_note: boolean;
  model_hash: string;
  disclaimer: string;
}

export interface PhraseInfluenceOut {
  phrase: string;
  adjusted_weight: number;
  raw_weight: number;
  doc_freq_ratio: number;
}

export interface GlobalRankingResponse {
  top_positive: PhraseInfluenceOut[];
  top_negative: PhraseInfluenceOut[];
  k: number;
  model_hash: string;
  disclaimer: string;
}

export interface ModelSummaryResponse {
  format_version: number;
  service_version: string;
  vocabulary_size: number;
  ngram_range: [number, number];
  n_training_docs: number;
  train_config: Record<string, unknown>;
  metrics: Record<string, Record<string, unknown>>;
  model_hash: string;
  disclaimer: string;
}

export interface PinnedSnapshot {
  text: string;
  predictedMonths: number;
  predictedDisplay: string;
  modelHash: string;
}

export interface SessionState {
  currentText: string;
  lastResponse: PredictResponse | null;
  history: PinnedSnapshot[];
  modelHash: string;
}
