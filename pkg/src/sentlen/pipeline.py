"""End-to-end training: clean, split, featurize, fit, evaluate."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .corpus import CorpusSplit, LabeledDocument, RawDocument, load_corpus, split_corpus
from .explain import ScatterPoint, scatter_data
from .features import fit_idf, fit_vocabulary, transform_tfidf
from .model_io import ModelBundle
from .settings import PipelineSettings
from .sgd import evaluate, train


@dataclass(frozen=True)
class TrainOutcome:
    bundle: ModelBundle
    split: CorpusSplit
    scatter_test: list[ScatterPoint]
    timings: dict[str, float]


def run_training(
    documents: list[RawDocument],
    labels: dict[str, float],
    settings: PipelineSettings,
) -> TrainOutcome:
    t_start = time.perf_counter()
    cleaning = settings.cleaning()
    corpus = load_corpus(documents, labels, cleaning)
    split = split_corpus(corpus, settings.split)

    f = settings.features
    f.validate()
    vocab = fit_vocabulary(
        [d.cleaned_text for d in split.train],
        min_df=f.min_df,
        max_df_ratio=f.max_df_ratio,
        n_min=f.ngram_min,
        n_max=f.ngram_max,
    )
    idf = fit_idf(vocab)

    def vectorize(docs: tuple[LabeledDocument, ...]):
        return [
            (transform_tfidf(d.cleaned_text, vocab, idf), d.sentence_months)
            for d in docs
        ]

    train_xy = vectorize(split.train)
    val_xy = vectorize(split.val)
    test_xy = vectorize(split.test)
    t_featurized = time.perf_counter()

    model = train(train_xy, val_xy, vocab.size, settings.train)
    t_trained = time.perf_counter()

    metrics = {
        "train": evaluate(model, train_xy),
        "val": evaluate(model, val_xy),
        "test": evaluate(model, test_xy),
    }
    scatter = scatter_data(
        model, [(d.id, vec, y) for d, (vec, y) in zip(split.test, test_xy)]
    )
    bundle = ModelBundle(
        vocab=vocab,
        idf=idf,
        model=model,
        cleaning=cleaning,
        feature_params=f,
        training_metrics=metrics,
    )
    return TrainOutcome(
        bundle=bundle,
        split=split,
        scatter_test=scatter,
        timings={
            "featurize_seconds": t_featurized - t_start,
            "train_seconds": t_trained - t_featurized,
            "total_seconds": time.perf_counter() - t_start,
        },
    )
