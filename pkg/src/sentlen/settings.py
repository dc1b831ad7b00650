"""Run settings: defaults, config-file parsing, and overrides.

Config files are plain ``key = value`` lines; ``#`` starts a comment.
Command-line flags override file values, which override the defaults.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .corpus import (
    DEFAULT_LEAKAGE_PHRASES,
    CleaningConfig,
    SplitSpec,
    load_default_stop_words,
    load_stop_words_file,
)
from .errors import DataError
from .features import FeatureParams
from .sgd import TrainConfig


@dataclass(frozen=True)
class PipelineSettings:
    stop_words_file: str | None = None  # None means the list shipped with the package
    leakage_phrases: tuple[str, ...] = DEFAULT_LEAKAGE_PHRASES
    assault_domain: bool = False
    split: SplitSpec = SplitSpec()
    features: FeatureParams = FeatureParams()
    train: TrainConfig = TrainConfig()

    def resolve_stop_words(self) -> frozenset[str]:
        if self.stop_words_file is None:
            return load_default_stop_words()
        return load_stop_words_file(self.stop_words_file)

    def cleaning(self) -> CleaningConfig:
        return CleaningConfig(
            stop_words=self.resolve_stop_words(),
            leakage_phrases=self.leakage_phrases,
            assault_domain=self.assault_domain,
        )


def _parse_bool(raw: str) -> bool:
    lowered = raw.strip().lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise ValueError(f"not a boolean: {raw!r}")


def _parse_phrases(raw: str) -> tuple[str, ...]:
    phrases = tuple(p.strip() for p in raw.split(",") if p.strip())
    if not phrases:
        raise ValueError("leakage_phrases must name at least one phrase")
    return phrases


_PARSERS = {
    "stop_words_file": str,
    "leakage_phrases": _parse_phrases,
    "assault_domain": _parse_bool,
    "train_fraction": float,
    "val_fraction": float,
    "test_fraction": float,
    "seed": int,
    "ngram_min": int,
    "ngram_max": int,
    "min_df": int,
    "max_df_ratio": float,
    "epsilon": float,
    "alpha": float,
    "max_epochs": int,
    "eta0": float,
    "power_t": float,
    "early_stop_patience": int,
    "early_stop_tol": float,
}

SETTINGS_KEYS = tuple(_PARSERS)


def parse_config_file(path: str | Path) -> dict[str, str]:
    path = Path(path)
    if not path.is_file():
        raise DataError(f"config file not found: {path}")
    values: dict[str, str] = {}
    for line_no, line in enumerate(path.read_text("utf-8").splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise DataError(f"{path}:{line_no}: expected 'key = value', got {line!r}")
        key, _, raw = body.partition("=")
        key = key.strip()
        if key not in _PARSERS:
            raise DataError(
                f"{path}:{line_no}: unknown setting {key!r}"
                f" (known: {', '.join(SETTINGS_KEYS)})"
            )
        if key in values:
            raise DataError(f"{path}:{line_no}: duplicate setting {key!r}")
        values[key] = raw.strip()
    return values


def build_settings(values: dict[str, str]) -> PipelineSettings:
    """Turn raw string values into typed settings; unknown keys are an error."""
    parsed = {}
    for key, raw in values.items():
        if key not in _PARSERS:
            raise DataError(f"unknown setting {key!r}")
        try:
            parsed[key] = _PARSERS[key](raw)
        except ValueError as err:
            raise DataError(f"bad value for setting {key!r}: {err}") from err

    defaults = PipelineSettings()
    split = SplitSpec(
        train_fraction=parsed.get("train_fraction", defaults.split.train_fraction),
        val_fraction=parsed.get("val_fraction", defaults.split.val_fraction),
        test_fraction=parsed.get("test_fraction", defaults.split.test_fraction),
        seed=parsed.get("seed", defaults.split.seed),
    )
    features = FeatureParams(
        ngram_min=parsed.get("ngram_min", defaults.features.ngram_min),
        ngram_max=parsed.get("ngram_max", defaults.features.ngram_max),
        min_df=parsed.get("min_df", defaults.features.min_df),
        max_df_ratio=parsed.get("max_df_ratio", defaults.features.max_df_ratio),
    )
    features.validate()
    train = TrainConfig(
        epsilon=parsed.get("epsilon", defaults.train.epsilon),
        alpha=parsed.get("alpha", defaults.train.alpha),
        max_epochs=parsed.get("max_epochs", defaults.train.max_epochs),
        eta0=parsed.get("eta0", defaults.train.eta0),
        power_t=parsed.get("power_t", defaults.train.power_t),
        early_stop_patience=parsed.get(
            "early_stop_patience", defaults.train.early_stop_patience
        ),
        early_stop_tol=parsed.get("early_stop_tol", defaults.train.early_stop_tol),
        seed=parsed.get("seed", defaults.train.seed),
    )
    settings = PipelineSettings(
        stop_words_file=parsed.get("stop_words_file"),
        leakage_phrases=parsed.get("leakage_phrases", defaults.leakage_phrases),
        assault_domain=parsed.get("assault_domain", defaults.assault_domain),
        split=split,
        features=features,
        train=train,
    )
    settings.split.validate()
    return settings


def settings_to_dict(settings: PipelineSettings) -> dict:
    """Flat snapshot for manifests; one key per documented setting."""
    return {
        "stop_words_file": settings.stop_words_file,
        "leakage_phrases": list(settings.leakage_phrases),
        "assault_domain": settings.assault_domain,
        "train_fraction": settings.split.train_fraction,
        "val_fraction": settings.split.val_fraction,
        "test_fraction": settings.split.test_fraction,
        "seed": settings.train.seed,
        "ngram_min": settings.features.ngram_min,
        "ngram_max": settings.features.ngram_max,
        "min_df": settings.features.min_df,
        "max_df_ratio": settings.features.max_df_ratio,
        "epsilon": settings.train.epsilon,
        "alpha": settings.train.alpha,
        "max_epochs": settings.train.max_epochs,
        "eta0": settings.train.eta0,
        "power_t": settings.train.power_t,
        "early_stop_patience": settings.train.early_stop_patience,
        "early_stop_tol": settings.train.early_stop_tol,
    }
