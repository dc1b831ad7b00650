"""Explainable sentence-length regression over court-decision text.

Pipeline: clean and split a labeled corpus, featurize with n-gram tf-idf,
fit an L1-regularized linear model by SGD under an epsilon-insensitive
squared loss, then explain it globally (phrase rankings) and per document
(exact contribution breakdowns).  A CLI and an HTTP service wrap the
library; a what-if UI can sit on the service.
"""

__version__ = "0.1.0"

from .corpus import (
    CleaningConfig,
    CorpusSplit,
    LabeledDocument,
    RawDocument,
    SplitSpec,
    clean_text,
    load_corpus,
    load_default_stop_words,
    split_corpus,
)
from .errors import DataError, ModelFormatError, SentlenError, TrainingError
from .explain import (
    Contribution,
    DocumentExplanation,
    PhraseInfluence,
    ScatterPoint,
    explain_document,
    global_ranking,
    scatter_data,
)
from .features import (
    FeatureParams,
    IdfWeights,
    SparseVector,
    Vocabulary,
    count_vector,
    extract_ngrams,
    fit_idf,
    fit_vocabulary,
    term_frequency,
    tokenize,
    transform_tfidf,
)
from .model_io import ModelBundle, load_model, save_model
from .pipeline import TrainOutcome, run_training
from .settings import PipelineSettings, build_settings, parse_config_file
from .sgd import (
    EvalMetrics,
    LinearModel,
    TrainConfig,
    evaluate,
    loss,
    loss_gradient,
    predict,
    train,
)
from .synth import SynthCorpus, SynthSpec, generate_corpus, write_corpus

__all__ = [
    "CleaningConfig",
    "Contribution",
    "CorpusSplit",
    "DataError",
    "DocumentExplanation",
    "EvalMetrics",
    "FeatureParams",
    "IdfWeights",
    "LabeledDocument",
    "LinearModel",
    "ModelBundle",
    "ModelFormatError",
    "PhraseInfluence",
    "PipelineSettings",
    "RawDocument",
    "ScatterPoint",
    "SentlenError",
    "SparseVector",
    "SplitSpec",
    "SynthCorpus",
    "SynthSpec",
    "TrainConfig",
    "TrainOutcome",
    "TrainingError",
    "Vocabulary",
    "build_settings",
    "clean_text",
    "count_vector",
    "evaluate",
    "explain_document",
    "extract_ngrams",
    "fit_idf",
    "fit_vocabulary",
    "generate_corpus",
    "global_ranking",
    "load_corpus",
    "load_default_stop_words",
    "load_model",
    "loss",
    "loss_gradient",
    "parse_config_file",
    "predict",
    "run_training",
    "save_model",
    "scatter_data",
    "split_corpus",
    "term_frequency",
    "tokenize",
    "train",
    "transform_tfidf",
    "write_corpus",
]
