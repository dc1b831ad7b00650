"""Versioned JSON model files.

A model file is self-contained: cleaning config (including the full stop
word list, so prediction-time cleaning reproduces training-time cleaning
from the file alone), featurization parameters, the fitted vocabulary with
document frequencies, idf values, weights, intercept, the training config,
and summary metrics.  Floats are written with Python's shortest
round-trip repr, so nothing is lost and a same-seed retrain produces a
byte-identical file.  Writes go through a temp file and an atomic rename;
a partial model file is never left behind.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .corpus import CleaningConfig
from .errors import ModelFormatError
from .features import FeatureParams, IdfWeights, Vocabulary
from .sgd import EvalMetrics, LinearModel, TrainConfig

MODEL_FORMAT_VERSION = 1

_SPLIT_NAMES = ("train", "val", "test")


@dataclass(frozen=True)
class ModelBundle:
    vocab: Vocabulary
    idf: IdfWeights
    model: LinearModel
    cleaning: CleaningConfig
    feature_params: FeatureParams
    training_metrics: dict[str, EvalMetrics]


def stop_words_digest(stop_words: frozenset[str]) -> str:
    payload = "\n".join(sorted(stop_words)).encode("utf-8")
    return hashlib.sha256(payload).hexdigest()


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def metrics_to_json(metrics: EvalMetrics) -> dict:
    r2 = metrics.r_squared if math.isfinite(metrics.r_squared) else "undefined"
    return {"mae": metrics.mae, "r_squared": r2, "n": metrics.n}


def metrics_from_json(doc: dict) -> EvalMetrics:
    r2 = doc["r_squared"]
    return EvalMetrics(
        mae=float(doc["mae"]),
        r_squared=float("-inf") if r2 == "undefined" else float(r2),
        n=int(doc["n"]),
    )


def bundle_to_document(bundle: ModelBundle) -> dict:
    return {
        "format_version": MODEL_FORMAT_VERSION,
        "cleaning": {
            "stop_words": sorted(bundle.cleaning.stop_words),
            "leakage_phrases": list(bundle.cleaning.leakage_phrases),
            "assault_domain": bundle.cleaning.assault_domain,
        },
        "stop_words_sha256": stop_words_digest(bundle.cleaning.stop_words),
        "features": asdict(bundle.feature_params),
        "vocabulary": {
            "terms": list(bundle.vocab.terms),
            "doc_freq": [bundle.vocab.doc_freq[t] for t in bundle.vocab.terms],
            "n_docs": bundle.vocab.n_docs,
        },
        "idf": [float(v) for v in bundle.idf.values],
        "weights": [float(w) for w in bundle.model.weights],
        "intercept": bundle.model.intercept,
        "train_config": asdict(bundle.model.config),
        "training": {
            "epochs_run": bundle.model.epochs_run,
            "stopped_early": bundle.model.stopped_early,
            "metrics": {
                name: metrics_to_json(bundle.training_metrics[name])
                for name in _SPLIT_NAMES
                if name in bundle.training_metrics
            },
        },
    }


def save_model(path: str | Path, bundle: ModelBundle) -> None:
    path = Path(path)
    payload = json.dumps(bundle_to_document(bundle), indent=2) + "\n"
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(payload, encoding="utf-8")
    os.replace(tmp, path)


def _require(doc: dict, key: str):
    if key not in doc:
        raise ModelFormatError(f"model file is missing field {key!r}")
    return doc[key]


def load_model(path: str | Path) -> ModelBundle:
    path = Path(path)
    if not path.is_file():
        raise ModelFormatError(f"model file not found: {path}")
    try:
        doc = json.loads(path.read_text("utf-8"))
    except (OSError, json.JSONDecodeError) as err:
        raise ModelFormatError(f"cannot read model file {path}: {err}") from err
    if not isinstance(doc, dict):
        raise ModelFormatError(f"model file {path} is not a JSON object")
    version = _require(doc, "format_version")
    if version != MODEL_FORMAT_VERSION:
        raise ModelFormatError(
            f"unsupported model format_version {version!r}"
            f" (this build reads version {MODEL_FORMAT_VERSION})"
        )
    try:
        cleaning_doc = _require(doc, "cleaning")
        cleaning = CleaningConfig(
            stop_words=frozenset(cleaning_doc["stop_words"]),
            leakage_phrases=tuple(cleaning_doc["leakage_phrases"]),
            assault_domain=bool(cleaning_doc["assault_domain"]),
        )
        feature_params = FeatureParams(**_require(doc, "features"))
        vocab_doc = _require(doc, "vocabulary")
        terms = tuple(vocab_doc["terms"])
        doc_freq_list = list(vocab_doc["doc_freq"])
        if len(doc_freq_list) != len(terms):
            raise ModelFormatError(
                f"vocabulary has {len(terms)} terms but {len(doc_freq_list)}"
                " doc_freq entries"
            )
        vocab = Vocabulary(
            terms=terms,
            index={t: i for i, t in enumerate(terms)},
            doc_freq={t: int(c) for t, c in zip(terms, doc_freq_list)},
            n_docs=int(vocab_doc["n_docs"]),
            n_range=(feature_params.ngram_min, feature_params.ngram_max),
        )
        idf_values = np.array(_require(doc, "idf"), dtype=float)
        weights = np.array(_require(doc, "weights"), dtype=float)
        if len(idf_values) != len(terms) or len(weights) != len(terms):
            raise ModelFormatError(
                f"vocabulary size {len(terms)} does not match idf"
                f" ({len(idf_values)}) or weights ({len(weights)})"
            )
        config = TrainConfig(**_require(doc, "train_config"))
        training = _require(doc, "training")
        model = LinearModel(
            weights=weights,
            intercept=float(_require(doc, "intercept")),
            config=config,
            epochs_run=int(training["epochs_run"]),
            stopped_early=bool(training["stopped_early"]),
        )
        metrics = {
            name: metrics_from_json(block)
            for name, block in training.get("metrics", {}).items()
        }
    except ModelFormatError:
        raise
    except (KeyError, TypeError, ValueError) as err:
        raise ModelFormatError(f"malformed model file {path}: {err}") from err
    return ModelBundle(
        vocab=vocab,
        idf=IdfWeights(values=idf_values),
        model=model,
        cleaning=cleaning,
        feature_params=feature_params,
        training_metrics=metrics,
    )
