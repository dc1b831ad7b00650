"""Corpus ingestion: text cleaning, label attachment, and seeded splitting.

Cleaning keeps the regression honest.  The target (sentence length in
months) leaks into decision text through phrases like "home detention" and
through bare numbers, so those are stripped along with punctuation,
accents, stop words, and the month/year unit words.  Cleaning is repeated
to a fixed point: removing a stop word can make two leakage tokens
adjacent ("home to detention"), and a single pass would leave that new
phrase behind.
"""

from __future__ import annotations

import csv
import math
import random
import re
import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import DataError

DEFAULT_LEAKAGE_PHRASES: tuple[str, ...] = (
    "home detention",
    "community detention",
    "preventative detention",
)

TIME_UNIT_WORDS = frozenset({"month", "months", "year", "years"})

# Longest sentence in the assault-domain data: 14.5 years.
ASSAULT_DOMAIN_MAX_MONTHS = 174.0

MIN_SPLIT_CORPUS = 10

_SEPARATORS = re.compile(r"[^a-z0-9]+")


@dataclass(frozen=True)
class RawDocument:
    id: str
    text: str


@dataclass(frozen=True)
class LabeledDocument:
    id: str
    cleaned_text: str
    sentence_months: float


@dataclass(frozen=True)
class CleaningConfig:
    stop_words: frozenset[str]
    leakage_phrases: tuple[str, ...] = DEFAULT_LEAKAGE_PHRASES
    assault_domain: bool = False


@dataclass(frozen=True)
class SplitSpec:
    train_fraction: float = 0.65
    val_fraction: float = 0.10
    test_fraction: float = 0.25
    seed: int = 0

    def validate(self) -> None:
        fractions = (self.train_fraction, self.val_fraction, self.test_fraction)
        if any(f <= 0 for f in fractions):
            raise DataError("split fractions must all be positive")
        if abs(sum(fractions) - 1.0) > 1e-9:
            raise DataError(f"split fractions must sum to 1, got {sum(fractions)!r}")


@dataclass(frozen=True)
class CorpusSplit:
    train: tuple[LabeledDocument, ...]
    val: tuple[LabeledDocument, ...]
    test: tuple[LabeledDocument, ...]


def load_default_stop_words() -> frozenset[str]:
    """Stop words shipped with the package, one lowercase token per line."""
    text = resources.files("sentlen").joinpath("data/stop_words.txt").read_text("utf-8")
    return frozenset(line.strip() for line in text.splitlines() if line.strip())


def load_stop_words_file(path: str | Path) -> frozenset[str]:
    path = Path(path)
    if not path.is_file():
        raise DataError(f"stop-word file not found: {path}")
    # Cleaning lowercases the text before matching, so an upper-case stop
    # word could never fire; normalize here instead of failing silently.
    words = frozenset(
        line.strip().lower()
        for line in path.read_text("utf-8").splitlines()
        if line.strip()
    )
    if not words:
        raise DataError(f"stop-word file is empty: {path}")
    return words


def _strip_accents(text: str) -> str:
    decomposed = unicodedata.normalize("NFKD", text)
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch))


def _normalize_phrase(phrase: str) -> str:
    return " ".join(t for t in _SEPARATORS.split(_strip_accents(phrase).lower()) if t)


@lru_cache(maxsize=64)
def _leakage_patterns(phrases: tuple[str, ...]) -> tuple[re.Pattern[str], ...]:
    # Phrase tokens may be separated by any run of non-alphanumerics in the
    # input ("Home  Detention," still counts), but must match whole tokens.
    patterns = []
    for phrase in phrases:
        normalized = _normalize_phrase(phrase)
        if not normalized:
            continue
        body = r"[^a-z0-9]+".join(re.escape(tok) for tok in normalized.split(" "))
        patterns.append(re.compile(r"(?<![a-z0-9])" + body + r"(?![a-z0-9])"))
    return tuple(patterns)


def _clean_pass(
    text: str, stop_words: frozenset[str], leakage_phrases: tuple[str, ...]
) -> str:
    text = _strip_accents(text).lower()
    for pattern in _leakage_patterns(leakage_phrases):
        text = pattern.sub(" ", text)
    tokens = (t for t in _SEPARATORS.split(text) if t)
    kept = [
        t
        for t in tokens
        if not t.isdigit() and t not in TIME_UNIT_WORDS and t not in stop_words
    ]
    return " ".join(kept)


def clean_text(
    raw: str,
    stop_words: frozenset[str],
    leakage_phrases: tuple[str, ...] = DEFAULT_LEAKAGE_PHRASES,
) -> str:
    """Normalize one document to space-joined lowercase alphanumeric tokens.

    Lowercases, strips accents to base letters, removes leakage phrases as
    whole phrases before tokenization, then drops standalone numeric
    tokens, month/year unit words, and stop words.  The pass repeats until
    the text stops changing, so the result is idempotent and can never
    contain a leakage phrase.
    """
    phrases = tuple(leakage_phrases)
    text = raw
    while True:
        cleaned = _clean_pass(text, stop_words, phrases)
        if cleaned == text:
            return cleaned
        text = cleaned


def load_corpus(
    documents: list[RawDocument],
    labels: dict[str, float],
    config: CleaningConfig,
) -> list[LabeledDocument]:
    """Clean and label documents, preserving input order.

    Every problem found is reported: missing or invalid labels, duplicate
    ids, and documents that clean to nothing are collected into one
    DataError rather than being silently dropped.
    """
    problems: list[str] = []
    seen: set[str] = set()
    out: list[LabeledDocument] = []
    for doc in documents:
        if not doc.id:
            problems.append("document with an empty id")
            continue
        if doc.id in seen:
            problems.append(f"duplicate document id {doc.id!r}")
            continue
        seen.add(doc.id)
        if doc.id not in labels:
            problems.append(f"no label for document {doc.id!r}")
            continue
        months = float(labels[doc.id])
        if not math.isfinite(months) or months < 0:
            problems.append(
                f"label for {doc.id!r} must be a finite non-negative number of"
                f" months, got {labels[doc.id]!r}"
            )
            continue
        if config.assault_domain and months > ASSAULT_DOMAIN_MAX_MONTHS:
            problems.append(
                f"label for {doc.id!r} is {months:g} months, outside the"
                f" assault-domain range [0, {ASSAULT_DOMAIN_MAX_MONTHS:g}]"
            )
            continue
        cleaned = clean_text(doc.text, config.stop_words, config.leakage_phrases)
        if not cleaned:
            problems.append(f"document {doc.id!r} is empty after cleaning")
            continue
        out.append(LabeledDocument(doc.id, cleaned, months))
    if problems:
        raise DataError("corpus rejected:\n  " + "\n  ".join(problems))
    return out


def split_corpus(corpus: list[LabeledDocument], spec: SplitSpec) -> CorpusSplit:
    """Seeded shuffle split with floor-rule sizes.

    The shuffle is random.Random(seed).shuffle (CPython's Mersenne Twister,
    whose stream is stable across platforms and versions), so a given
    corpus and seed always produce the same split.  Sizes are
    n_test = floor(test_fraction * N) and n_val = floor(val_fraction * N);
    train takes the remainder.  The shuffled sequence is consumed in the
    order test, val, train.
    """
    spec.validate()
    docs = list(corpus)
    if len(docs) < MIN_SPLIT_CORPUS:
        raise DataError(
            f"need at least {MIN_SPLIT_CORPUS} documents to split, got {len(docs)}"
        )
    ids = [d.id for d in docs]
    if len(set(ids)) != len(ids):
        raise DataError("corpus ids must be unique before splitting")
    order = list(range(len(docs)))
    random.Random(spec.seed).shuffle(order)
    shuffled = [docs[i] for i in order]
    n_test = math.floor(spec.test_fraction * len(docs))
    n_val = math.floor(spec.val_fraction * len(docs))
    return CorpusSplit(
        train=tuple(shuffled[n_test + n_val :]),
        val=tuple(shuffled[n_test : n_test + n_val]),
        test=tuple(shuffled[:n_test]),
    )


def read_labels_csv(path: str | Path) -> dict[str, float]:
    """Parse a labels file with the exact header ``id,sentence_months``."""
    path = Path(path)
    if not path.is_file():
        raise DataError(f"labels file not found: {path}")
    labels: dict[str, float] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["id", "sentence_months"]:
            raise DataError(
                f"{path}: expected header 'id,sentence_months', got {header!r}"
            )
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != 2:
                raise DataError(f"{path}:{line_no}: expected two columns, got {row!r}")
            doc_id, raw_months = row
            if doc_id in labels:
                raise DataError(f"{path}:{line_no}: duplicate label for id {doc_id!r}")
            try:
                labels[doc_id] = float(raw_months)
            except ValueError:
                raise DataError(
                    f"{path}:{line_no}: sentence_months is not a number: {raw_months!r}"
                ) from None
    return labels


def read_corpus_dir(
    corpus_dir: str | Path, labels_path: str | Path | None = None
) -> tuple[list[RawDocument], dict[str, float]]:
    """Read ``*.txt`` decisions (sorted by filename) plus their labels file."""
    corpus_dir = Path(corpus_dir)
    if not corpus_dir.is_dir():
        raise DataError(f"corpus directory not found: {corpus_dir}")
    labels_path = Path(labels_path) if labels_path else corpus_dir / "labels.csv"
    documents = [
        RawDocument(id=p.stem, text=p.read_text("utf-8"))
        for p in sorted(corpus_dir.glob("*.txt"))
    ]
    if not documents:
        raise DataError(f"no .txt documents found in {corpus_dir}")
    return documents, read_labels_csv(labels_path)
