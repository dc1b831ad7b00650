"""Command-line behavior end to end, plus month rendering."""

import io
import json

import pytest

from sentlen.cli import EXIT_DATA, EXIT_OK, EXIT_TRAINING, EXIT_USAGE, main
from sentlen.display import format_months, out_of_range
from sentlen.model_io import load_model

CORPUS_ARGS = ["--docs", "60", "--vocab-size", "8", "--seed", "9"]


@pytest.fixture(scope="module")
def corpus_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("cli") / "corpus"
    assert main(["synth", "--out", str(out), *CORPUS_ARGS]) == EXIT_OK
    return out


@pytest.fixture(scope="module")
def run_dir(corpus_dir, tmp_path_factory):
    out = tmp_path_factory.mktemp("cli") / "run"
    code = main(["train", str(corpus_dir), "--out", str(out), "--seed", "2"])
    assert code == EXIT_OK
    return out


# ---------------------------------------------------------------- display


@pytest.mark.parametrize(
    ("months", "rendered"),
    [
        (23.0, "23 months (1 year 11 months)"),
        (12.0, "12 months (1 year 0 months)"),
        (24.5, "24.5 months (2 years 0.5 months)"),
        (6.0, "6 months"),
        (11.9, "11.9 months"),
        (0.0, "0 months"),
        (-3.0, "-3 months"),
    ],
)
def test_format_months(months, rendered):
    assert format_months(months) == rendered


def test_out_of_range_boundaries():
    assert not out_of_range(0.0)
    assert not out_of_range(174.0)
    assert out_of_range(174.5)
    assert out_of_range(-0.1)


# ---------------------------------------------------------------- train


def test_train_writes_all_artifacts(run_dir):
    for name in (
        "model.json",
        "metrics.json",
        "scatter_test.csv",
        "scatter_test.json",
        "manifest.json",
    ):
        assert (run_dir / name).is_file(), name

    metrics = json.loads((run_dir / "metrics.json").read_text("utf-8"))
    assert set(metrics) == {"split_sizes", "train", "val", "test"}
    assert metrics["split_sizes"] == {"train": 39, "val": 6, "test": 15}
    for split in ("train", "val", "test"):
        assert set(metrics[split]) == {"mae", "r_squared", "n"}

    manifest = json.loads((run_dir / "manifest.json").read_text("utf-8"))
    assert manifest["command"] == "train"
    assert manifest["settings"]["seed"] == 2
    assert "featurize_seconds" in manifest["timings"]


def test_train_prints_the_summary(corpus_dir, run_dir, capsys, tmp_path):
    code = main(["train", str(corpus_dir), "--out", str(tmp_path / "r"), "--seed", "2"])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert "split sizes: train 39, val 6, test 15" in out
    assert "train (n=39): mae " in out and "test (n=15): mae " in out
    assert "model written to" in out


def test_train_respects_config_file(corpus_dir, tmp_path, capsys):
    conf = tmp_path / "run.conf"
    conf.write_text("max_epochs = 5\nseed = 3\n", encoding="utf-8")
    out = tmp_path / "run"
    code = main(
        ["train", str(corpus_dir), "--config", str(conf), "--out", str(out)]
    )
    assert code == EXIT_OK
    bundle = load_model(out / "model.json")
    assert bundle.model.config.max_epochs == 5
    assert bundle.model.config.seed == 3
    assert bundle.model.epochs_run <= 5


def test_train_seed_flag_overrides_config(corpus_dir, tmp_path):
    conf = tmp_path / "run.conf"
    conf.write_text("seed = 3\n", encoding="utf-8")
    out = tmp_path / "run"
    code = main(
        [
            "train",
            str(corpus_dir),
            "--config",
            str(conf),
            "--seed",
            "8",
            "--out",
            str(out),
        ]
    )
    assert code == EXIT_OK
    assert load_model(out / "model.json").model.config.seed == 8


def test_train_missing_labels_file(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "a.txt").write_text("wounding\n", encoding="utf-8")
    code = main(["train", str(corpus), "--out", str(tmp_path / "run")])
    assert code == EXIT_DATA
    assert "labels.csv" in capsys.readouterr().err


def test_train_corpus_too_small(tmp_path, capsys):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    lines = ["id,sentence_months"]
    for i in range(5):
        (corpus / f"d{i}.txt").write_text(f"wounding case {i}\n", encoding="utf-8")
        lines.append(f"d{i},12")
    (corpus / "labels.csv").write_text("\n".join(lines) + "\n", encoding="utf-8")
    code = main(["train", str(corpus), "--out", str(tmp_path / "run")])
    assert code == EXIT_DATA
    assert "at least 10" in capsys.readouterr().err


def test_train_divergence_exit_code(corpus_dir, tmp_path, capsys):
    conf = tmp_path / "run.conf"
    conf.write_text("eta0 = 1000000\nepsilon = 0\n", encoding="utf-8")
    code = main(
        ["train", str(corpus_dir), "--config", str(conf), "--out", str(tmp_path / "r")]
    )
    assert code == EXIT_TRAINING
    assert "diverged" in capsys.readouterr().err


def test_unknown_config_key_is_a_data_error(corpus_dir, tmp_path, capsys):
    conf = tmp_path / "run.conf"
    conf.write_text("warp_speed = 9\n", encoding="utf-8")
    code = main(
        ["train", str(corpus_dir), "--config", str(conf), "--out", str(tmp_path / "r")]
    )
    assert code == EXIT_DATA
    assert "unknown setting" in capsys.readouterr().err


# ---------------------------------------------------------------- predict


def test_predict_from_file(run_dir, corpus_dir, capsys):
    doc = sorted(corpus_dir.glob("*.txt"))[0]
    code = main(["predict", str(run_dir / "model.json"), str(doc)])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    months_line = [l for l in out.splitlines() if l.startswith("predicted_months: ")]
    assert len(months_line) == 1
    float(months_line[0].split(": ", 1)[1])  # full-precision repr parses back
    assert "display: " in out


def test_predict_from_stdin(run_dir, capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("wholly unknown words"))
    code = main(["predict", str(run_dir / "model.json")])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert "no phrases from the model vocabulary" in out


def test_predict_oov_prediction_is_the_intercept(run_dir, capsys, monkeypatch):
    bundle = load_model(run_dir / "model.json")
    monkeypatch.setattr("sys.stdin", io.StringIO("wholly unknown words"))
    main(["predict", str(run_dir / "model.json")])
    out = capsys.readouterr().out
    line = next(l for l in out.splitlines() if l.startswith("predicted_months: "))
    assert float(line.split(": ", 1)[1]) == bundle.model.intercept


def test_predict_missing_model(tmp_path, capsys):
    code = main(["predict", str(tmp_path / "no.json")])
    assert code == EXIT_DATA


def test_predict_missing_text_file(run_dir, capsys):
    code = main(["predict", str(run_dir / "model.json"), "/no/such/file.txt"])
    assert code == EXIT_DATA
    assert "text file not found" in capsys.readouterr().err


# ---------------------------------------------------------------- explain


def test_explain_global_csv(run_dir, capsys):
    code = main(["explain", str(run_dir / "model.json")])
    assert code == EXIT_OK
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "phrase,adjusted_weight,raw_weight,doc_freq_ratio"


def test_explain_global_json_honors_top(run_dir, capsys):
    code = main(["explain", str(run_dir / "model.json"), "--format", "json", "-k", "2"])
    assert code == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert set(doc) == {"top_positive", "top_negative"}
    assert len(doc["top_positive"]) <= 2
    assert len(doc["top_negative"]) <= 2


def test_explain_document_json(run_dir, corpus_dir, capsys):
    doc_path = sorted(corpus_dir.glob("*.txt"))[0]
    code = main(
        ["explain", str(run_dir / "model.json"), str(doc_path), "--format", "json"]
    )
    assert code == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert abs(
        doc["intercept"] + doc["contribution_total"] - doc["prediction"]
    ) <= 1e-9


def test_explain_out_flag_writes_a_file(run_dir, tmp_path, capsys):
    target = tmp_path / "ranking.csv"
    code = main(["explain", str(run_dir / "model.json"), "--out", str(target)])
    assert code == EXIT_OK
    assert target.read_text("utf-8").startswith("phrase,")
    assert str(target) in capsys.readouterr().out


def test_explain_rejects_non_positive_top(run_dir, capsys):
    code = main(["explain", str(run_dir / "model.json"), "--top", "0"])
    assert code == EXIT_USAGE
    assert "--top" in capsys.readouterr().err


# ---------------------------------------------------------------- synth


def test_synth_reports_what_it_wrote(tmp_path, capsys):
    out = tmp_path / "c"
    code = main(["synth", "--out", str(out), "--docs", "25", "--vocab-size", "5"])
    assert code == EXIT_OK
    assert "wrote 25 documents" in capsys.readouterr().out
    assert (out / "ground_truth.json").is_file()


def test_synth_rejects_bad_sizes(tmp_path, capsys):
    code = main(["synth", "--out", str(tmp_path / "c"), "--docs", "3"])
    assert code == EXIT_DATA


# ---------------------------------------------------------------- usage


def test_unknown_subcommand_is_usage_error(capsys):
    assert main(["frobnicate"]) == EXIT_USAGE


def test_unknown_flag_is_usage_error(capsys):
    assert main(["synth", "--out", "x", "--frequency", "9"]) == EXIT_USAGE


def test_missing_required_flag_is_usage_error(capsys):
    assert main(["synth"]) == EXIT_USAGE
