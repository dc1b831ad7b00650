"""Config-file parsing and settings assembly."""

import pytest

from sentlen.errors import DataError
from sentlen.settings import (
    SETTINGS_KEYS,
    PipelineSettings,
    build_settings,
    parse_config_file,
    settings_to_dict,
)

FULL_CONFIG = """\
# every documented key, all at once
stop_words_file = {stops}
leakage_phrases = home detention, community detention, suspended sentence
assault_domain = true
train_fraction = 0.6
val_fraction = 0.15
test_fraction = 0.25
seed = 11
ngram_min = 1
ngram_max = 2          # trailing comment
min_df = 2
max_df_ratio = 0.8
epsilon = 0.2
alpha = 0.01
max_epochs = 500
eta0 = 0.02
power_t = 0.3
early_stop_patience = 8
early_stop_tol = 0.005
"""


def test_defaults():
    settings = build_settings({})
    assert settings == PipelineSettings()
    assert settings.split.seed == 0
    assert settings.train.alpha == 0.001


def test_full_config_file(tmp_path):
    stops = tmp_path / "stops.txt"
    stops.write_text("the\nto\n", encoding="utf-8")
    path = tmp_path / "run.conf"
    path.write_text(FULL_CONFIG.format(stops=stops), encoding="utf-8")
    settings = build_settings(parse_config_file(path))
    assert settings.stop_words_file == str(stops)
    assert settings.leakage_phrases == (
        "home detention",
        "community detention",
        "suspended sentence",
    )
    assert settings.assault_domain is True
    assert settings.split.val_fraction == 0.15
    assert settings.features.ngram_max == 2
    assert settings.train.max_epochs == 500
    assert settings.train.early_stop_patience == 8
    assert settings.resolve_stop_words() == {"the", "to"}


def test_comments_and_blank_lines_are_ignored(tmp_path):
    path = tmp_path / "run.conf"
    path.write_text("\n# comment only\n\nseed = 4  # inline\n\n", encoding="utf-8")
    assert parse_config_file(path) == {"seed": "4"}


def test_unknown_key_names_the_line(tmp_path):
    path = tmp_path / "run.conf"
    path.write_text("seed = 1\nlearning_rate = 0.5\n", encoding="utf-8")
    with pytest.raises(DataError, match=r":2: unknown setting 'learning_rate'"):
        parse_config_file(path)


def test_duplicate_key_names_the_line(tmp_path):
    path = tmp_path / "run.conf"
    path.write_text("seed = 1\nseed = 2\n", encoding="utf-8")
    with pytest.raises(DataError, match=r":2: duplicate setting 'seed'"):
        parse_config_file(path)


def test_line_without_equals_is_rejected(tmp_path):
    path = tmp_path / "run.conf"
    path.write_text("seed 4\n", encoding="utf-8")
    with pytest.raises(DataError, match="expected 'key = value'"):
        parse_config_file(path)


def test_missing_config_file():
    with pytest.raises(DataError, match="not found"):
        parse_config_file("/does/not/exist.conf")


def test_bad_value_is_reported_with_its_key():
    with pytest.raises(DataError, match="bad value for setting 'max_epochs'"):
        build_settings({"max_epochs": "many"})


def test_unknown_key_rejected_at_build_time_too():
    with pytest.raises(DataError, match="unknown setting"):
        build_settings({"momentum": "0.9"})


def test_seed_applies_to_both_split_and_training():
    settings = build_settings({"seed": "77"})
    assert settings.split.seed == 77
    assert settings.train.seed == 77


def test_invalid_fractions_rejected_at_build_time():
    with pytest.raises(DataError, match="sum to 1"):
        build_settings({"train_fraction": "0.9"})


def test_invalid_feature_params_rejected_at_build_time():
    with pytest.raises(DataError):
        build_settings({"ngram_min": "0"})


def test_bool_parsing():
    assert build_settings({"assault_domain": "YES"}).assault_domain is True
    assert build_settings({"assault_domain": "0"}).assault_domain is False
    with pytest.raises(DataError):
        build_settings({"assault_domain": "maybe"})


def test_settings_to_dict_covers_every_documented_key():
    snapshot = settings_to_dict(PipelineSettings())
    assert set(SETTINGS_KEYS) <= set(snapshot)
    assert snapshot["alpha"] == 0.001
    assert snapshot["seed"] == 0
