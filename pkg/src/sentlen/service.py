"""HTTP prediction and explanation service over one immutable model.

The model file is loaded once at startup and never mutated; every JSON
response carries the model file's content hash so clients can detect a
swap, plus a fixed disclaimer.  Identical requests therefore produce
byte-identical responses.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import __version__
from .corpus import clean_text
from .display import format_months, out_of_range
from .errors import DataError, SentlenError
from .explain import DEFAULT_TOP_K, explain_document, global_ranking
from .model_io import MODEL_FORMAT_VERSION, file_digest, load_model

MAX_REQUEST_BYTES = 1 << 20  # 1 MiB

DISCLAIMER = (
    "Research prototype trained on historical decisions; outputs are"
    " exploratory and are not legal advice."
)


class ContributionOut(BaseModel):
    phrase: str
    tfidf: float
    weight: float
    contribution: float


class PredictResponse(BaseModel):
    predicted_months: float
    predicted_display: str
    out_of_range: bool
    intercept: float
    contributions: list[ContributionOut]
    contribution_total: float
    oov_note: bool
    model_hash: str
    disclaimer: str


class PhraseInfluenceOut(BaseModel):
    phrase: str
    adjusted_weight: float
    raw_weight: float
    doc_freq_ratio: float


class GlobalRankingResponse(BaseModel):
    top_positive: list[PhraseInfluenceOut]
    top_negative: list[PhraseInfluenceOut]
    k: int
    model_hash: str
    disclaimer: str


class ModelSummaryResponse(BaseModel):
    format_version: int
    service_version: str
    vocabulary_size: int
    ngram_range: tuple[int, int]
    n_training_docs: int
    train_config: dict
    metrics: dict[str, dict]
    model_hash: str
    disclaimer: str


def create_app(model_path: str | Path, ui_dir: str | Path | None = None) -> FastAPI:
    model_path = Path(model_path)
    bundle = load_model(model_path)
    model_hash = file_digest(model_path)

    app = FastAPI(title="sentlen", version=__version__)

    @app.get("/healthz", response_class=PlainTextResponse)
    def healthz() -> str:
        return "ok"

    @app.post("/api/v1/predict", response_model=PredictResponse)
    async def handle_predict(request: Request):
        body = await request.body()
        if len(body) > MAX_REQUEST_BYTES:
            return JSONResponse(
                {"detail": f"request body exceeds {MAX_REQUEST_BYTES} bytes"},
                status_code=413,
            )
        try:
            payload = json.loads(body)
        except (json.JSONDecodeError, UnicodeDecodeError):
            return JSONResponse(
                {"detail": "request body is not valid JSON"}, status_code=400
            )
        text = payload.get("text") if isinstance(payload, dict) else None
        if not isinstance(text, str) or not text.strip():
            return JSONResponse(
                {"detail": "field 'text' must be a non-empty string"}, status_code=400
            )
        cleaned = clean_text(
            text, bundle.cleaning.stop_words, bundle.cleaning.leakage_phrases
        )
        try:
            explanation = explain_document(
                bundle.model, cleaned, bundle.vocab, bundle.idf, k=DEFAULT_TOP_K
            )
        except SentlenError as err:  # sum failed to reproduce the prediction
            return JSONResponse({"detail": str(err)}, status_code=500)
        months = explanation.prediction
        return PredictResponse(
            predicted_months=months,
            predicted_display=format_months(months),
            out_of_range=out_of_range(months),
            intercept=explanation.intercept,
            contributions=[
                ContributionOut(**asdict(c)) for c in explanation.contributions
            ],
            contribution_total=explanation.contribution_total,
            oov_note=not explanation.contributions,
            model_hash=model_hash,
            disclaimer=DISCLAIMER,
        )

    @app.get("/api/v1/explain/global", response_model=GlobalRankingResponse)
    def handle_global(k: int = Query(default=DEFAULT_TOP_K)):
        if k < 1:
            return JSONResponse({"detail": "k must be at least 1"}, status_code=400)
        top_positive, top_negative = global_ranking(
            bundle.model, bundle.vocab, bundle.idf, k=k
        )
        return GlobalRankingResponse(
            top_positive=[PhraseInfluenceOut(**asdict(p)) for p in top_positive],
            top_negative=[PhraseInfluenceOut(**asdict(p)) for p in top_negative],
            k=k,
            model_hash=model_hash,
            disclaimer=DISCLAIMER,
        )

    @app.get("/api/v1/model", response_model=ModelSummaryResponse)
    def handle_model_summary():
        from .model_io import metrics_to_json

        return ModelSummaryResponse(
            format_version=MODEL_FORMAT_VERSION,
            service_version=__version__,
            vocabulary_size=bundle.vocab.size,
            ngram_range=bundle.vocab.n_range,
            n_training_docs=bundle.vocab.n_docs,
            train_config=asdict(bundle.model.config),
            metrics={
                name: metrics_to_json(m) for name, m in bundle.training_metrics.items()
            },
            model_hash=model_hash,
            disclaimer=DISCLAIMER,
        )

    if ui_dir is not None:
        ui_path = Path(ui_dir)
        if not ui_path.is_dir():
            raise DataError(f"ui directory not found: {ui_path}")
        # Mounted last so the API routes above take precedence.
        app.mount("/", StaticFiles(directory=ui_path, html=True), name="ui")

    return app
