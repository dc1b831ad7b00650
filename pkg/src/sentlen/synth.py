"""Deterministic synthetic corpora with a planted sparse linear signal.

Each document is a token stream over a small generated vocabulary, with a
unique filler token between every pair of real tokens.  Fillers appear in
exactly one document each, so document-frequency pruning removes them, and
because every bigram/trigram contains a filler, no higher-order n-gram
survives either: the fitted vocabulary is exactly the planted unigrams.
Fillers are also out-of-vocabulary, so they never dilute the tf
denominator.  Targets are then an exactly linear function of the tf-idf
features plus Gaussian noise, which gives end-to-end training a known
answer to recover.  The planted weights land in a ground-truth sidecar for
oracle tests.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from pathlib import Path

from .corpus import TIME_UNIT_WORDS, RawDocument, load_default_stop_words
from .errors import DataError

_SYLLABLES = (
    "ba", "ce", "di", "fo", "gu", "ha", "je", "ki", "lo", "mu",
    "na", "pe", "qi", "ro", "su", "ta", "ve", "wi", "xo", "zu",
)

_PRESENT_PROB = 0.35
_MAX_TERM_COUNT = 4
_WEIGHT_RANGE = (25.0, 60.0)
_TOKENS_PER_SENTENCE = 10


@dataclass(frozen=True)
class SynthSpec:
    n_docs: int = 300
    vocab_size: int = 30
    sparsity: float = 0.25  # fraction of vocabulary terms with a nonzero planted weight
    noise_sigma: float = 1.0
    seed: int = 0
    base_months: float = 60.0

    def validate(self) -> None:
        if self.n_docs < 20:
            raise DataError("n_docs must be at least 20")
        if not 2 <= self.vocab_size <= 2000:
            raise DataError("vocab_size must be between 2 and 2000")
        if not 0 < self.sparsity <= 1:
            raise DataError("sparsity must be in (0, 1]")
        if not math.isfinite(self.noise_sigma) or self.noise_sigma < 0:
            raise DataError("noise_sigma must be finite and >= 0")
        if not math.isfinite(self.base_months) or self.base_months < 0:
            raise DataError("base_months must be finite and >= 0")


@dataclass(frozen=True)
class SynthCorpus:
    documents: list[RawDocument]
    labels: dict[str, float]
    terms: tuple[str, ...]
    planted_weights: dict[str, float]
    base_months: float
    clamped_labels: int


def _make_terms(
    rng: random.Random, vocab_size: int, stop_words: frozenset[str]
) -> tuple[str, ...]:
    terms: list[str] = []
    seen: set[str] = set()
    while len(terms) < vocab_size:
        word = "".join(rng.choice(_SYLLABLES) for _ in range(3))
        if word in seen or word in stop_words or word in TIME_UNIT_WORDS:
            continue
        seen.add(word)
        terms.append(word)
    return tuple(sorted(terms))


def generate_corpus(
    spec: SynthSpec, stop_words: frozenset[str] | None = None
) -> SynthCorpus:
    spec.validate()
    if stop_words is None:
        stop_words = load_default_stop_words()
    rng = random.Random(spec.seed)
    terms = _make_terms(rng, spec.vocab_size, stop_words)

    n_active = max(1, round(spec.sparsity * spec.vocab_size))
    active = sorted(rng.sample(range(len(terms)), n_active))
    planted: dict[str, float] = {}
    weight_by_index: dict[int, float] = {}
    for position, term_index in enumerate(active):
        magnitude = rng.uniform(*_WEIGHT_RANGE)
        sign = 1.0 if position % 2 == 0 else -1.0  # both directions always populated
        weight_by_index[term_index] = sign * magnitude
        planted[terms[term_index]] = sign * magnitude

    counts_by_doc: list[dict[int, int]] = []
    texts: list[str] = []
    for d in range(spec.n_docs):
        present = [j for j in range(len(terms)) if rng.random() < _PRESENT_PROB]
        while len(present) < 2:
            present = [j for j in range(len(terms)) if rng.random() < _PRESENT_PROB]
        counts = {j: rng.randint(1, _MAX_TERM_COUNT) for j in present}
        counts_by_doc.append(counts)

        stream: list[str] = []
        for j in sorted(counts):
            stream.extend([terms[j]] * counts[j])
        rng.shuffle(stream)
        tokens: list[str] = []
        for i, tok in enumerate(stream):
            if i:
                tokens.append(f"f{d}x{i}")  # df == 1, pruned; breaks every n>1 gram
            tokens.append(tok)
        words = []
        since_break = 0
        for tok in tokens:
            words.append(tok)
            since_break += 1
            if since_break >= _TOKENS_PER_SENTENCE:
                words[-1] += "."
                since_break = 0
        texts.append(" ".join(words))

    # idf over the full generated corpus; the train-split refit only
    # rescales each feature by a constant, which a linear model absorbs.
    doc_freq = [0] * len(terms)
    for counts in counts_by_doc:
        for j in counts:
            doc_freq[j] += 1
    idf = [
        math.log((1.0 + spec.n_docs) / (1.0 + doc_freq[j])) + 1.0
        for j in range(len(terms))
    ]

    documents: list[RawDocument] = []
    labels: dict[str, float] = {}
    clamped = 0
    for d, counts in enumerate(counts_by_doc):
        total = sum(counts.values())
        signal = sum(
            weight_by_index[j] * (counts[j] / total) * idf[j]
            for j in counts
            if j in weight_by_index
        )
        months = spec.base_months + signal + rng.gauss(0.0, spec.noise_sigma)
        if months < 0.0:
            months = 0.0
            clamped += 1
        doc_id = f"synth{d:04d}"
        documents.append(RawDocument(id=doc_id, text=texts[d]))
        labels[doc_id] = months

    return SynthCorpus(
        documents=documents,
        labels=labels,
        terms=terms,
        planted_weights=planted,
        base_months=spec.base_months,
        clamped_labels=clamped,
    )


def write_corpus(
    spec: SynthSpec, out_dir: str | Path, stop_words: frozenset[str] | None = None
) -> SynthCorpus:
    """Write one .txt per document, labels.csv, and ground_truth.json."""
    corpus = generate_corpus(spec, stop_words)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for doc in corpus.documents:
        (out / f"{doc.id}.txt").write_text(doc.text + "\n", encoding="utf-8")
    lines = ["id,sentence_months"]
    lines += [f"{doc.id},{corpus.labels[doc.id]!r}" for doc in corpus.documents]
    (out / "labels.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    ground_truth = {
        "n_docs": spec.n_docs,
        "vocab_size": spec.vocab_size,
        "sparsity": spec.sparsity,
        "noise_sigma": spec.noise_sigma,
        "seed": spec.seed,
        "base_months": spec.base_months,
        "terms": list(corpus.terms),
        "planted_weights": corpus.planted_weights,
        "clamped_labels": corpus.clamped_labels,
    }
    (out / "ground_truth.json").write_text(
        json.dumps(ground_truth, indent=2) + "\n", encoding="utf-8"
    )
    return corpus
