import { Api, ApiError } from "./api.js";
import { DEBOUNCE_MS, Debounced, debounce } from "./debounce.js";
import {
  clearComparison,
  el,
  hideError,
  renderComparison,
  renderContributions,
  renderEmptyPrediction,
  renderGlobal,
  renderPins,
  renderPrediction,
  showError,
} from "./render.js";
import { RequestTracker } from "./tracker.js";
import { SessionState } from "./types.js";

const DISCLAIMER =
  "Research prototype trained on historical decisions; outputs are" +
  " exploratory and are not legal advice.";

const GLOBAL_K = 25;

export interface AppOptions {
  api?: Api;
  debounceMs?: number;
}

export class App {
  readonly state: SessionState = {
    currentText: "",
    lastResponse: null,
    history: [],
    modelHash: "",
  };

  readonly textarea: HTMLTextAreaElement;
  readonly predictionPanel: HTMLElement;
  readonly contributionList: HTMLElement;
  readonly errorBanner: HTMLElement;
  readonly pinButton: HTMLButtonElement;
  readonly pinList: HTMLElement;
  readonly comparePanel: HTMLElement;
  readonly globalPanel: HTMLElement;
  readonly modelLine: HTMLElement;

  private readonly api: Api;
  private readonly tracker = new RequestTracker();
  private readonly scheduleRefresh: Debounced;
  private selectedPins: number[] = [];
  private globalLoaded = false;

  constructor(root: HTMLElement, options: AppOptions = {}) {
    this.api = options.api ?? new Api();

    root.replaceChildren();
    const header = el("header");
    header.append(el("h1", undefined, "Sentence length what-if explorer"));
    this.modelLine = el("div", "model-line");
    header.append(this.modelLine);
    header.append(el("div", "disclaimer", DISCLAIMER));
    root.append(header);

    const tabs = el("nav", "tabs");
    const whatifTab = el("button", "tab active", "What-if") as HTMLButtonElement;
    const globalTab = el("button", "tab", "Global ranking") as HTMLButtonElement;
    tabs.append(whatifTab, globalTab);
    root.append(tabs);

    const whatifView = el("section", "view whatif-view");
    const globalView = el("section", "view global-view hidden");

    this.errorBanner = el("div", "error-banner");
    whatifView.append(this.errorBanner);

    this.textarea = document.createElement("textarea");
    this.textarea.placeholder = "Paste or edit case-fact text here...";
    this.textarea.addEventListener("input", () => {
      this.onTextChanged(this.textarea.value);
    });
    whatifView.append(this.textarea);

    this.predictionPanel = el("div", "prediction-panel");
    renderEmptyPrediction(this.predictionPanel);
    whatifView.append(this.predictionPanel);

    this.contributionList = el("div", "contribution-list");
    whatifView.append(this.contributionList);

    this.pinButton = el("button", "pin-button", "Pin this prediction") as HTMLButtonElement;
    this.pinButton.disabled = true;
    this.pinButton.addEventListener("click", () => this.pin());
    whatifView.append(this.pinButton);

    this.pinList = el("div", "pin-list");
    this.comparePanel = el("div", "compare-panel");
    whatifView.append(this.pinList, this.comparePanel);
    this.refreshPins();

    this.globalPanel = el("div", "global-panel");
    globalView.append(this.globalPanel);

    root.append(whatifView, globalView);

    const activate = (showGlobal: boolean) => {
      whatifView.classList.toggle("hidden", showGlobal);
      globalView.classList.toggle("hidden", !showGlobal);
      whatifTab.classList.toggle("active", !showGlobal);
      globalTab.classList.toggle("active", showGlobal);
      if (showGlobal && !this.globalLoaded) void this.loadGlobal();
    };
    whatifTab.addEventListener("click", () => activate(false));
    globalTab.addEventListener("click", () => activate(true));

    this.scheduleRefresh = debounce(
      () => void this.refresh(),
      options.debounceMs ?? DEBOUNCE_MS,
    );

    void this.loadModelLine();
  }

  onTextChanged(text: string): void {
    this.state.currentText = text;
    this.scheduleRefresh();
  }

  // One debounced pass: issue a request for the current text and apply
  // the response only if no newer request has been issued since.
  private async refresh(): Promise<void> {
    const text = this.state.currentText;
    const seq = this.tracker.next();

    if (text.trim() === "") {
      this.state.lastResponse = null;
      this.pinButton.disabled = true;
      renderEmptyPrediction(this.predictionPanel);
      this.contributionList.replaceChildren();
      hideError(this.errorBanner);
      return;
    }

    try {
      const resp = await this.api.predict(text);
      if (!this.tracker.isCurrent(seq)) return; // stale, drop silently
      this.state.lastResponse = resp;
      this.state.modelHash = resp.model_hash;
      this.pinButton.disabled = false;
      renderPrediction(this.predictionPanel, resp);
      renderContributions(this.contributionList, resp);
      hideError(this.errorBanner);
    } catch (err) {
      if (!this.tracker.isCurrent(seq)) return;
      const message =
        err instanceof ApiError
          ? `Prediction failed: ${err.message}`
          : "Prediction service unreachable.";
      // Non-blocking: the previous panel stays as it was.
      showError(this.errorBanner, message);
    }
  }

  pin(): void {
    const resp = this.state.lastResponse;
    if (!resp) return;
    this.state.history.push({
      text: this.state.currentText,
      predictedMonths: resp.predicted_months,
      predictedDisplay: resp.predicted_display,
      modelHash: resp.model_hash,
    });
    this.refreshPins();
  }

  togglePin(index: number): void {
    if (this.selectedPins.includes(index)) {
      this.selectedPins = this.selectedPins.filter((i) => i !== index);
    } else {
      // Keep at most two selections, newest-first eviction.
      this.selectedPins = [...this.selectedPins, index].slice(-2);
    }
    this.refreshPins();
  }

  private refreshPins(): void {
    renderPins(this.pinList, this.state.history, this.selectedPins, (i) =>
      this.togglePin(i),
    );
    if (this.selectedPins.length === 2) {
      const [a, b] = [...this.selectedPins].sort((x, y) => x - y);
      renderComparison(
        this.comparePanel,
        this.state.history[a],
        this.state.history[b],
      );
    } else {
      clearComparison(this.comparePanel);
    }
  }

  private async loadGlobal(): Promise<void> {
    try {
      const ranking = await this.api.explainGlobal(GLOBAL_K);
      this.globalLoaded = true;
      renderGlobal(this.globalPanel, ranking);
    } catch {
      this.globalPanel.replaceChildren(
        el("div", "placeholder", "Could not load the global ranking."),
      );
    }
  }

  private async loadModelLine(): Promise<void> {
    try {
      const summary = await this.api.modelSummary();
      this.modelLine.textContent =
        `model ${summary.model_hash.slice(0, 12)} | ` +
        `${summary.vocabulary_size} phrases | ` +
        `${summary.n_training_docs} training documents`;
    } catch {
      this.modelLine.textContent = "model details unavailable";
    }
  }
}

export function createApp(root: HTMLElement, options: AppOptions = {}): App {
  return new App(root, options);
}
