import { wordDiff } from "./diff.js";
import {
  GlobalRankingResponse,
  PhraseInfluenceOut,
  PinnedSnapshot,
  PredictResponse,
} from "./types.js";

// All user-controlled strings go through textContent, never innerHTML.
export function el(
  tag: string,
  className?: string,
  text?: string,
): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderPrediction(
  panel: HTMLElement,
  resp: PredictResponse,
): void {
  panel.replaceChildren();
  panel.classList.remove("empty");

  const months = el("div", "months-value", resp.predicted_months.toFixed(1));
  months.dataset.months = String(resp.predicted_months);
  panel.append(months);
  panel.append(el("div", "months-display", resp.predicted_display));

  if (resp.out_of_range) {
    panel.append(
      el("span", "badge badge-range", "outside the observed 0-174 month range"),
    );
  }
  if (resp.oov_note) {
    panel.append(
      el(
        "div",
        "oov-note",
        "No phrases from the model vocabulary were found; this is the intercept alone.",
      ),
    );
  }

  const intercept = el(
    "div",
    "intercept-line",
    `intercept ${resp.intercept.toFixed(2)}`,
  );
  intercept.dataset.intercept = String(resp.intercept);
  panel.append(intercept);
}

export function renderEmptyPrediction(panel: HTMLElement): void {
  panel.replaceChildren(
    el("div", "placeholder", "Type or paste decision text to see a prediction."),
  );
  panel.classList.add("empty");
}

export function renderContributions(
  list: HTMLElement,
  resp: PredictResponse,
): void {
  list.replaceChildren();
  const entries = resp.contributions.map((c) => ({
    phrase: c.phrase,
    value: c.contribution,
  }));

  // The listed contributions can be a top-k subset; keep the on-screen
  // sum honest by showing what the rest adds up to.
  const shown = entries.reduce((acc, e) => acc + e.value, 0);
  const rest = resp.contribution_total - shown;
  if (Math.abs(rest) > 0.005) {
    entries.push({ phrase: "(remaining phrases)", value: rest });
  }

  const maxAbs = Math.max(...entries.map((e) => Math.abs(e.value)), 1e-12);
  for (const entry of entries) {
    const row = el("div", "contrib-row");
    row.append(el("span", "contrib-phrase", entry.phrase));

    const track = el("div", "bar-track");
    const fill = el(
      "div",
      `bar-fill ${entry.value >= 0 ? "positive" : "negative"}`,
    );
    fill.style.width = `${(Math.abs(entry.value) / maxAbs) * 100}%`;
    track.append(fill);
    row.append(track);

    const label = el("span", "contrib-value", entry.value.toFixed(2));
    label.dataset.contribution = String(entry.value);
    row.append(label);
    list.append(row);
  }
}

function influenceRow(info: PhraseInfluenceOut): HTMLElement {
  const row = el("div", "influence-row");
  row.append(el("span", "influence-phrase", info.phrase));
  row.append(
    el("span", "influence-weight", info.adjusted_weight.toFixed(2)),
  );
  const track = el("div", "bar-track df-track");
  track.title = `${(info.doc_freq_ratio * 100).toFixed(0)}% of training documents`;
  const fill = el("div", "bar-fill df-fill");
  fill.style.width = `${info.doc_freq_ratio * 100}%`;
  track.append(fill);
  row.append(track);
  return row;
}

export function renderGlobal(
  container: HTMLElement,
  ranking: GlobalRankingResponse,
): void {
  container.replaceChildren();
  const columns: Array<[string, PhraseInfluenceOut[], string]> = [
    ["Phrases pushing sentences longer", ranking.top_positive, "positive-col"],
    ["Phrases pushing sentences shorter", ranking.top_negative, "negative-col"],
  ];
  for (const [title, rows, cls] of columns) {
    const col = el("div", `ranking-col ${cls}`);
    col.append(el("h3", undefined, title));
    if (rows.length === 0) col.append(el("div", "placeholder", "none"));
    for (const info of rows) col.append(influenceRow(info));
    container.append(col);
  }
}

export function renderPins(
  list: HTMLElement,
  pins: PinnedSnapshot[],
  selected: number[],
  onToggle: (index: number) => void,
): void {
  list.replaceChildren();
  if (pins.length === 0) {
    list.append(
      el("div", "placeholder", "Pin a prediction to start a comparison."),
    );
    return;
  }
  pins.forEach((pin, index) => {
    const row = el("div", "pin-row");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.checked = selected.includes(index);
    box.addEventListener("change", () => onToggle(index));
    row.append(box);
    row.append(el("span", "pin-months", pin.predictedDisplay));
    const excerpt =
      pin.text.length > 80 ? `${pin.text.slice(0, 80)}...` : pin.text;
    row.append(el("span", "pin-text", excerpt));
    list.append(row);
  });
}

export function renderComparison(
  panel: HTMLElement,
  a: PinnedSnapshot,
  b: PinnedSnapshot,
): void {
  panel.replaceChildren();
  if (a.modelHash !== b.modelHash) {
    panel.append(
      el(
        "div",
        "compare-disabled",
        "These snapshots were pinned under different models; comparison is disabled.",
      ),
    );
    return;
  }

  const delta = b.predictedMonths - a.predictedMonths;
  const deltaLine = el(
    "div",
    `compare-delta ${delta >= 0 ? "positive" : "negative"}`,
    `${delta >= 0 ? "+" : ""}${delta.toFixed(1)} months (${a.predictedMonths.toFixed(1)} to ${b.predictedMonths.toFixed(1)})`,
  );
  deltaLine.dataset.delta = String(delta);
  panel.append(deltaLine);

  const diffBox = el("div", "compare-diff");
  for (const span of wordDiff(a.text, b.text)) {
    diffBox.append(el("span", `diff-${span.kind}`, `${span.text} `));
  }
  panel.append(diffBox);
}

export function clearComparison(panel: HTMLElement): void {
  panel.replaceChildren(
    el("div", "placeholder", "Select two pins to compare them."),
  );
}

export function showError(banner: HTMLElement, message: string): void {
  banner.textContent = message;
  banner.classList.add("visible");
}

export function hideError(banner: HTMLElement): void {
  banner.textContent = "";
  banner.classList.remove("visible");
}
