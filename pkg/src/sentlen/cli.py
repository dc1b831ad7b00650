"""Command-line interface: train, predict, explain, synth, serve.

Exit codes: 0 success, 1 usage error, 2 data error, 3 training failure.
Every run that writes outputs also writes a manifest.json next to them
recording inputs, resolved settings, outputs, and timings.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import __version__
from .corpus import clean_text, read_corpus_dir
from .display import format_months, out_of_range
from .errors import DataError, TrainingError
from .explain import (
    explain_document,
    explanation_to_csv,
    explanation_to_json,
    global_ranking,
    ranking_to_csv,
    ranking_to_json,
    scatter_to_csv,
    scatter_to_json,
)
from .features import transform_tfidf
from .model_io import load_model, metrics_to_json, save_model
from .pipeline import run_training
from .settings import build_settings, parse_config_file, settings_to_dict
from .sgd import EvalMetrics, predict
from .synth import SynthSpec, write_corpus

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_TRAINING = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit(2); usage errors are 1 here
        raise _UsageError(f"{self.prog}: {message}")


def _metrics_line(name: str, metrics: EvalMetrics) -> str:
    r2 = f"{metrics.r_squared:.4f}" if metrics.r_squared > float("-inf") else "undefined"
    return f"{name} (n={metrics.n}): mae {metrics.mae:.3f} months, r_squared {r2}"


def _write_json(path: Path, payload) -> None:
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def cmd_train(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    values = parse_config_file(args.config) if args.config else {}
    if args.seed is not None:
        values["seed"] = str(args.seed)
    settings = build_settings(values)
    documents, labels = read_corpus_dir(args.corpus_dir, args.labels)
    outcome = run_training(documents, labels, settings)

    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    model_path = out_dir / "model.json"
    metrics_path = out_dir / "metrics.json"
    scatter_csv_path = out_dir / "scatter_test.csv"
    scatter_json_path = out_dir / "scatter_test.json"

    save_model(model_path, outcome.bundle)
    metrics = outcome.bundle.training_metrics
    _write_json(
        metrics_path,
        {
            "split_sizes": {
                "train": len(outcome.split.train),
                "val": len(outcome.split.val),
                "test": len(outcome.split.test),
            },
            "train": metrics_to_json(metrics["train"]),
            "val": metrics_to_json(metrics["val"]),
            "test": metrics_to_json(metrics["test"]),
        },
    )
    scatter_csv_path.write_text(scatter_to_csv(outcome.scatter_test), encoding="utf-8")
    _write_json(scatter_json_path, scatter_to_json(outcome.scatter_test))
    _write_json(
        out_dir / "manifest.json",
        {
            "command": "train",
            "tool_version": __version__,
            "inputs": {
                "corpus_dir": str(args.corpus_dir),
                "labels": str(args.labels) if args.labels else None,
                "config": str(args.config) if args.config else None,
            },
            "settings": settings_to_dict(settings),
            "outputs": {
                "model": str(model_path),
                "metrics": str(metrics_path),
                "scatter_csv": str(scatter_csv_path),
                "scatter_json": str(scatter_json_path),
            },
            "timings": {
                **outcome.timings,
                "command_seconds": time.perf_counter() - started,
            },
        },
    )

    print(
        f"split sizes: train {len(outcome.split.train)},"
        f" val {len(outcome.split.val)}, test {len(outcome.split.test)}"
    )
    for name in ("train", "val", "test"):
        print(_metrics_line(name, metrics[name]))
    print(
        f"trained for {outcome.bundle.model.epochs_run} epochs"
        f" ({'stopped early' if outcome.bundle.model.stopped_early else 'hit max_epochs'})"
    )
    print(f"model written to {model_path}")
    return EXIT_OK


def _read_text_input(text_file: str | None) -> str:
    if text_file:
        path = Path(text_file)
        if not path.is_file():
            raise DataError(f"text file not found: {path}")
        return path.read_text("utf-8")
    return sys.stdin.read()


def cmd_predict(args: argparse.Namespace) -> int:
    bundle = load_model(args.model)
    text = _read_text_input(args.text_file)
    cleaned = clean_text(
        text, bundle.cleaning.stop_words, bundle.cleaning.leakage_phrases
    )
    vec = transform_tfidf(cleaned, bundle.vocab, bundle.idf)
    months = predict(bundle.model, vec)
    print(f"predicted_months: {months!r}")
    print(f"display: {format_months(months)}")
    if not vec.entries:
        print(
            "note: no phrases from the model vocabulary appear in the input;"
            " the prediction is the intercept alone"
        )
    if out_of_range(months):
        print(
            "warning: prediction falls outside the 0-174 month range"
            " observed in the training domain"
        )
    return EXIT_OK


def cmd_explain(args: argparse.Namespace) -> int:
    if args.top < 1:
        raise _UsageError("sentlen explain: --top must be at least 1")
    bundle = load_model(args.model)
    if args.text_file:
        text = _read_text_input(args.text_file)
        cleaned = clean_text(
            text, bundle.cleaning.stop_words, bundle.cleaning.leakage_phrases
        )
        explanation = explain_document(
            bundle.model, cleaned, bundle.vocab, bundle.idf, k=args.top
        )
        if args.format == "csv":
            rendered = explanation_to_csv(explanation)
        else:
            rendered = json.dumps(explanation_to_json(explanation), indent=2) + "\n"
    else:
        top_positive, top_negative = global_ranking(
            bundle.model, bundle.vocab, bundle.idf, k=args.top
        )
        if args.format == "csv":
            rendered = ranking_to_csv(top_positive, top_negative)
        else:
            rendered = (
                json.dumps(ranking_to_json(top_positive, top_negative), indent=2) + "\n"
            )
    if args.out:
        Path(args.out).write_text(rendered, encoding="utf-8")
        print(f"explanation written to {args.out}")
    else:
        sys.stdout.write(rendered)
    return EXIT_OK


def cmd_synth(args: argparse.Namespace) -> int:
    spec = SynthSpec(
        n_docs=args.docs,
        vocab_size=args.vocab_size,
        sparsity=args.sparsity,
        noise_sigma=args.noise_sigma,
        seed=args.seed if args.seed is not None else 0,
    )
    corpus = write_corpus(spec, args.out)
    print(
        f"wrote {len(corpus.documents)} documents, labels.csv, and"
        f" ground_truth.json to {args.out}"
    )
    if corpus.clamped_labels:
        print(f"note: {corpus.clamped_labels} labels clamped at 0 months")
    return EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(args.model, ui_dir=args.ui)
    uvicorn.run(app, host=args.bind, port=args.port)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(
        prog="sentlen",
        description=(
            "Train, inspect, and serve an explainable sentence-length"
            " regression over court-decision text."
        ),
    )
    parser.add_argument("--version", action="version", version=f"sentlen {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    train_p = sub.add_parser("train", help="fit a model from a corpus directory")
    train_p.add_argument("corpus_dir", help="directory of .txt decisions")
    train_p.add_argument("--labels", help="labels csv (default: CORPUS_DIR/labels.csv)")
    train_p.add_argument("--config", help="key = value settings file")
    train_p.add_argument("--seed", type=int, help="override the split/training seed")
    train_p.add_argument("--out", required=True, help="output directory")
    train_p.set_defaults(func=cmd_train)

    predict_p = sub.add_parser("predict", help="predict months for one document")
    predict_p.add_argument("model", help="model.json from a train run")
    predict_p.add_argument("text_file", nargs="?", help="document (default: stdin)")
    predict_p.set_defaults(func=cmd_predict)

    explain_p = sub.add_parser(
        "explain",
        help="global phrase ranking, or a per-document breakdown when a text is given",
    )
    explain_p.add_argument("model", help="model.json from a train run")
    explain_p.add_argument("text_file", nargs="?", help="document to explain")
    explain_p.add_argument("-k", "--top", type=int, default=25, help="list length")
    explain_p.add_argument("--format", choices=("csv", "json"), default="csv")
    explain_p.add_argument("--out", help="write here instead of stdout")
    explain_p.set_defaults(func=cmd_explain)

    synth_p = sub.add_parser("synth", help="generate a synthetic planted-model corpus")
    synth_p.add_argument("--docs", type=int, default=300)
    synth_p.add_argument("--vocab-size", type=int, default=30)
    synth_p.add_argument("--sparsity", type=float, default=0.25)
    synth_p.add_argument("--noise-sigma", type=float, default=1.0)
    synth_p.add_argument("--seed", type=int, default=0)
    synth_p.add_argument("--out", required=True, help="corpus output directory")
    synth_p.set_defaults(func=cmd_synth)

    serve_p = sub.add_parser("serve", help="run the HTTP prediction service")
    serve_p.add_argument("model", help="model.json from a train run")
    serve_p.add_argument("--port", type=int, default=8080)
    serve_p.add_argument("--bind", default="127.0.0.1")
    serve_p.add_argument("--ui", help="directory with a built web UI to serve at /")
    serve_p.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DATA
    except TrainingError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_TRAINING


if __name__ == "__main__":
    sys.exit(main())
