"""Model interpretation: global phrase rankings, per-document contribution
breakdowns, and truth-vs-prediction scatter export.

Global rankings order phrases by weight * idf rather than raw weight: a
large weight on a near-ubiquitous phrase says less than the same weight on
a discriminating one.  Per-document contributions decompose a prediction
exactly: intercept plus the sum over every non-zero feature of
weight * tfidf reproduces the predicted months.
"""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass
from typing import Iterable, Sequence

from .errors import SentlenError
from .features import IdfWeights, SparseVector, Vocabulary, transform_tfidf
from .sgd import LinearModel, predict

EXPLANATION_SUM_TOLERANCE = 1e-9

DEFAULT_TOP_K = 25


@dataclass(frozen=True)
class PhraseInfluence:
    phrase: str
    raw_weight: float
    adjusted_weight: float  # raw weight scaled by the phrase's idf
    doc_freq_ratio: float  # fraction of training documents containing the phrase


@dataclass(frozen=True)
class Contribution:
    phrase: str
    tfidf: float
    weight: float
    contribution: float


@dataclass(frozen=True)
class DocumentExplanation:
    prediction: float
    intercept: float
    contributions: tuple[Contribution, ...]
    contribution_total: float  # summed over every non-zero feature, not just those listed


@dataclass(frozen=True)
class ScatterPoint:
    id: str
    truth_months: float
    predicted_months: float


def global_ranking(
    model: LinearModel, vocab: Vocabulary, idf: IdfWeights, k: int = DEFAULT_TOP_K
) -> tuple[list[PhraseInfluence], list[PhraseInfluence]]:
    """Top-k longer-sentence and top-k shorter-sentence phrases.

    Phrases are ranked by adjusted weight (weight * idf); zero-weight
    phrases never appear.  Ties break lexicographically.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if model.dimension != vocab.size:
        raise ValueError(
            f"model dimension {model.dimension} does not match vocabulary"
            f" size {vocab.size}"
        )
    positive: list[PhraseInfluence] = []
    negative: list[PhraseInfluence] = []
    for i, term in enumerate(vocab.terms):
        raw = float(model.weights[i])
        if raw == 0.0:
            continue
        influence = PhraseInfluence(
            phrase=term,
            raw_weight=raw,
            adjusted_weight=float(raw * idf.values[i]),
            doc_freq_ratio=vocab.doc_freq[term] / vocab.n_docs,
        )
        (positive if raw > 0.0 else negative).append(influence)
    positive.sort(key=lambda inf: (-inf.adjusted_weight, inf.phrase))
    negative.sort(key=lambda inf: (inf.adjusted_weight, inf.phrase))
    return positive[:k], negative[:k]


def explain_document(
    model: LinearModel,
    cleaned_text: str,
    vocab: Vocabulary,
    idf: IdfWeights,
    k: int | None = DEFAULT_TOP_K,
) -> DocumentExplanation:
    """Decompose one prediction into per-phrase contributions.

    The listed contributions are the k largest by magnitude (all of them
    when k is None), but contribution_total always covers every non-zero
    feature, and intercept + contribution_total must reproduce the
    prediction to within 1e-9; a violation means the model state is
    corrupt and raises.
    """
    if k is not None and k < 1:
        raise ValueError("k must be at least 1")
    x = transform_tfidf(cleaned_text, vocab, idf)
    prediction = predict(model, x)
    contributions = [
        Contribution(
            phrase=vocab.terms[i],
            tfidf=v,
            weight=float(model.weights[i]),
            contribution=float(model.weights[i]) * v,
        )
        for i, v in x.entries.items()
    ]
    total = sum(c.contribution for c in contributions)
    mismatch = abs(model.intercept + total - prediction)
    # not-<= rather than > so that a NaN mismatch also fails the check
    if not mismatch <= EXPLANATION_SUM_TOLERANCE:
        raise SentlenError(
            "contribution sum does not reproduce the prediction:"
            f" {model.intercept + total!r} vs {prediction!r}"
        )
    contributions.sort(key=lambda c: (-abs(c.contribution), c.phrase))
    shown = contributions if k is None else contributions[:k]
    return DocumentExplanation(
        prediction=prediction,
        intercept=model.intercept,
        contributions=tuple(shown),
        contribution_total=total,
    )


def scatter_data(
    model: LinearModel, dataset: Sequence[tuple[str, SparseVector, float]]
) -> list[ScatterPoint]:
    """One (id, truth, prediction) point per document, in dataset order."""
    points = [
        ScatterPoint(
            id=doc_id,
            truth_months=float(truth),
            predicted_months=predict(model, vec),
        )
        for doc_id, vec, truth in dataset
    ]
    if not points:
        raise ValueError("cannot build scatter data from an empty dataset")
    return points


def ranking_to_csv(
    top_positive: Iterable[PhraseInfluence], top_negative: Iterable[PhraseInfluence]
) -> str:
    """One table, positives first; the sign of adjusted_weight separates
    the two directions."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["phrase", "adjusted_weight", "raw_weight", "doc_freq_ratio"])
    for inf in list(top_positive) + list(top_negative):
        writer.writerow(
            [inf.phrase, repr(inf.adjusted_weight), repr(inf.raw_weight), repr(inf.doc_freq_ratio)]
        )
    return buf.getvalue()


def ranking_to_json(
    top_positive: Iterable[PhraseInfluence], top_negative: Iterable[PhraseInfluence]
) -> dict:
    return {
        "top_positive": [asdict(inf) for inf in top_positive],
        "top_negative": [asdict(inf) for inf in top_negative],
    }


def explanation_to_csv(explanation: DocumentExplanation) -> str:
    buf = io.StringIO()
    buf.write(f"# prediction: {explanation.prediction!r}\n")
    buf.write(f"# intercept: {explanation.intercept!r}\n")
    buf.write(f"# contribution_total: {explanation.contribution_total!r}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["phrase", "tfidf", "weight", "contribution"])
    for c in explanation.contributions:
        writer.writerow([c.phrase, repr(c.tfidf), repr(c.weight), repr(c.contribution)])
    return buf.getvalue()


def explanation_to_json(explanation: DocumentExplanation) -> dict:
    return {
        "prediction": explanation.prediction,
        "intercept": explanation.intercept,
        "contribution_total": explanation.contribution_total,
        "contributions": [asdict(c) for c in explanation.contributions],
    }


def scatter_to_csv(points: Iterable[ScatterPoint]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id", "truth_months", "predicted_months"])
    for p in points:
        writer.writerow([p.id, repr(p.truth_months), repr(p.predicted_months)])
    return buf.getvalue()


def scatter_to_json(points: Iterable[ScatterPoint]) -> list[dict]:
    return [asdict(p) for p in points]
