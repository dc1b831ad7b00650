"""Shared fixtures: a small trained model reused across test modules.

Training is deterministic, so session scope is safe; nothing mutates the
bundle or the saved file.
"""

import pytest

from sentlen.corpus import SplitSpec
from sentlen.model_io import save_model
from sentlen.pipeline import run_training
from sentlen.settings import PipelineSettings
from sentlen.sgd import TrainConfig
from sentlen.synth import SynthSpec, generate_corpus

SMALL_SPEC = SynthSpec(n_docs=80, vocab_size=12, noise_sigma=0.5, seed=5)


@pytest.fixture(scope="session")
def small_corpus():
    return generate_corpus(SMALL_SPEC)


@pytest.fixture(scope="session")
def small_outcome(small_corpus):
    settings = PipelineSettings(
        split=SplitSpec(seed=5), train=TrainConfig(seed=5)
    )
    return run_training(small_corpus.documents, small_corpus.labels, settings)


@pytest.fixture(scope="session")
def small_bundle(small_outcome):
    return small_outcome.bundle


@pytest.fixture(scope="session")
def model_file(small_bundle, tmp_path_factory):
    path = tmp_path_factory.mktemp("model") / "model.json"
    save_model(path, small_bundle)
    return path
