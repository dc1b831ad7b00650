"""n-gram tf-idf featurization over cleaned text.

tf(t, d) is the count of t in d divided by the total in-vocabulary count
in d, summed over n-grams of every order.  idf(t) = ln((1 + n_docs) /
(1 + df(t))) + 1, so every idf value is at least 1 and no term can zero
out.  The vocabulary is fit on the training split only.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import DataError


@dataclass(frozen=True)
class FeatureParams:
    ngram_min: int = 1
    ngram_max: int = 3
    min_df: int = 3
    max_df_ratio: float = 0.9

    def validate(self) -> None:
        if self.ngram_min < 1 or self.ngram_max < self.ngram_min:
            raise DataError(
                f"bad n-gram range ({self.ngram_min}, {self.ngram_max}):"
                " need 1 <= ngram_min <= ngram_max"
            )
        if self.min_df < 1:
            raise DataError("min_df must be at least 1")
        if not 0 < self.max_df_ratio <= 1:
            raise DataError("max_df_ratio must be in (0, 1]")


@dataclass(frozen=True)
class SparseVector:
    """Index -> value map for one document; zero entries are never stored."""

    entries: dict[int, float]
    dimension: int

    def __post_init__(self) -> None:
        for i, v in self.entries.items():
            if not 0 <= i < self.dimension:
                raise ValueError(f"index {i} out of range for dimension {self.dimension}")
            if v == 0.0:
                raise ValueError(f"zero entry stored at index {i}")


@dataclass(frozen=True)
class Vocabulary:
    terms: tuple[str, ...]
    index: dict[str, int]
    doc_freq: dict[str, int]
    n_docs: int
    n_range: tuple[int, int]

    @property
    def size(self) -> int:
        return len(self.terms)


@dataclass(frozen=True, eq=False)
class IdfWeights:
    values: np.ndarray


def tokenize(cleaned_text: str) -> list[str]:
    return cleaned_text.split()


def extract_ngrams(tokens: list[str], n_min: int = 1, n_max: int = 3) -> list[str]:
    """All n-grams as space-joined strings, shorter orders first, each
    order left to right."""
    grams: list[str] = []
    for n in range(n_min, n_max + 1):
        for i in range(len(tokens) - n + 1):
            grams.append(" ".join(tokens[i : i + n]))
    return grams


def fit_vocabulary(
    train_docs: Iterable[str],
    min_df: int = 3,
    max_df_ratio: float = 0.9,
    n_min: int = 1,
    n_max: int = 3,
) -> Vocabulary:
    """Collect n-grams from cleaned training docs and prune by document
    frequency: keep min_df <= df(t) <= floor(max_df_ratio * n_docs).

    Terms are ordered lexicographically, which fixes feature indices.
    """
    docs = list(train_docs)
    if not docs:
        raise DataError("cannot fit a vocabulary on an empty training set")
    df: Counter[str] = Counter()
    for doc in docs:
        df.update(set(extract_ngrams(tokenize(doc), n_min, n_max)))
    max_count = math.floor(max_df_ratio * len(docs))
    survivors = sorted(t for t, c in df.items() if min_df <= c <= max_count)
    if not survivors:
        raise DataError(
            f"no terms survive document-frequency pruning"
            f" (min_df={min_df}, max_df={max_count}, n_docs={len(docs)})"
        )
    return Vocabulary(
        terms=tuple(survivors),
        index={t: i for i, t in enumerate(survivors)},
        doc_freq={t: df[t] for t in survivors},
        n_docs=len(docs),
        n_range=(n_min, n_max),
    )


def count_vector(cleaned_text: str, vocab: Vocabulary) -> SparseVector:
    """Raw in-vocabulary n-gram counts; out-of-vocabulary grams are ignored."""
    counts = Counter(
        g
        for g in extract_ngrams(tokenize(cleaned_text), *vocab.n_range)
        if g in vocab.index
    )
    entries = {vocab.index[t]: float(c) for t, c in counts.items()}
    return SparseVector(entries=entries, dimension=vocab.size)


def term_frequency(counts: SparseVector) -> SparseVector:
    """Counts normalized by the document's total in-vocabulary count."""
    total = sum(counts.entries.values())
    if total == 0:
        return SparseVector(entries={}, dimension=counts.dimension)
    entries = {i: c / total for i, c in counts.entries.items()}
    return SparseVector(entries=entries, dimension=counts.dimension)


def fit_idf(vocab: Vocabulary) -> IdfWeights:
    df = np.array([vocab.doc_freq[t] for t in vocab.terms], dtype=float)
    values = np.log((1.0 + vocab.n_docs) / (1.0 + df)) + 1.0
    return IdfWeights(values=values)


def transform_tfidf(cleaned_text: str, vocab: Vocabulary, idf: IdfWeights) -> SparseVector:
    """tf * idf for one cleaned document.

    Reads nothing outside (vocab, idf): a fitted pair transforms unseen
    text without touching the training corpus again.
    """
    if len(idf.values) != vocab.size:
        raise DataError(
            f"idf length {len(idf.values)} does not match vocabulary size {vocab.size}"
        )
    tf = term_frequency(count_vector(cleaned_text, vocab))
    entries = {i: float(v * idf.values[i]) for i, v in tf.entries.items()}
    return SparseVector(entries=entries, dimension=vocab.size)
