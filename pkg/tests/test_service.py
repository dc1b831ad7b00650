"""HTTP surface: routes, status codes, and parity with the core library."""

import pytest
from fastapi.testclient import TestClient

from sentlen.errors import DataError
from sentlen.model_io import file_digest
from sentlen.service import DISCLAIMER, MAX_REQUEST_BYTES, create_app


@pytest.fixture(scope="module")
def client(model_file):
    with TestClient(create_app(model_file)) as c:
        yield c


@pytest.fixture(scope="module")
def known_text(small_bundle):
    # Built from vocabulary terms, so contributions are non-empty.
    return " ".join(small_bundle.vocab.terms[:4])


def test_healthz(client):
    resp = client.get("/healthz")
    assert resp.status_code == 200
    assert resp.text == "ok"


# ---------------------------------------------------------------- predict


def test_predict_happy_path(client, known_text, small_bundle):
    resp = client.post("/api/v1/predict", json={"text": known_text})
    assert resp.status_code == 200
    doc = resp.json()
    assert set(doc) == {
        "predicted_months",
        "predicted_display",
        "out_of_range",
        "intercept",
        "contributions",
        "contribution_total",
        "oov_note",
        "model_hash",
        "disclaimer",
    }
    assert doc["intercept"] == small_bundle.model.intercept
    assert doc["oov_note"] is False
    assert doc["contributions"]
    assert doc["disclaimer"] == DISCLAIMER
    assert (
        abs(doc["intercept"] + doc["contribution_total"] - doc["predicted_months"])
        <= 1e-9
    )


def test_predict_is_reproducible(client, known_text):
    a = client.post("/api/v1/predict", json={"text": known_text})
    b = client.post("/api/v1/predict", json={"text": known_text})
    assert a.content == b.content


def test_predict_oov_falls_back_to_intercept(client, small_bundle):
    resp = client.post("/api/v1/predict", json={"text": "zzz qqq unseen"})
    assert resp.status_code == 200
    doc = resp.json()
    assert doc["oov_note"] is True
    assert doc["contributions"] == []
    assert doc["predicted_months"] == small_bundle.model.intercept


@pytest.mark.parametrize("payload", [{}, {"text": ""}, {"text": "   "}, {"text": 7}])
def test_predict_rejects_unusable_text(client, payload):
    resp = client.post("/api/v1/predict", json=payload)
    assert resp.status_code == 400
    assert "text" in resp.json()["detail"]


def test_predict_rejects_malformed_json(client):
    resp = client.post(
        "/api/v1/predict",
        content=b"{not json",
        headers={"content-type": "application/json"},
    )
    assert resp.status_code == 400
    assert "JSON" in resp.json()["detail"]


def test_predict_rejects_oversize_body(client):
    filler = "x" * (MAX_REQUEST_BYTES + 10)
    resp = client.post("/api/v1/predict", json={"text": filler})
    assert resp.status_code == 413


def test_model_hash_matches_the_file(client, model_file):
    resp = client.post("/api/v1/predict", json={"text": "anything at all"})
    assert resp.json()["model_hash"] == file_digest(model_file)


# ------------------------------------------------------------ explanations


def test_global_ranking_default(client):
    resp = client.get("/api/v1/explain/global")
    assert resp.status_code == 200
    doc = resp.json()
    assert set(doc) == {
        "top_positive",
        "top_negative",
        "k",
        "model_hash",
        "disclaimer",
    }
    assert doc["k"] == 25
    for entry in doc["top_positive"]:
        assert set(entry) == {
            "phrase",
            "adjusted_weight",
            "raw_weight",
            "doc_freq_ratio",
        }
        assert entry["adjusted_weight"] > 0
    for entry in doc["top_negative"]:
        assert entry["adjusted_weight"] < 0


def test_global_ranking_k_truncates(client):
    doc = client.get("/api/v1/explain/global", params={"k": 3}).json()
    assert doc["k"] == 3
    assert len(doc["top_positive"]) <= 3
    assert len(doc["top_negative"]) <= 3


def test_global_ranking_rejects_non_positive_k(client):
    assert client.get("/api/v1/explain/global", params={"k": 0}).status_code == 400


# ----------------------------------------------------------------- summary


def test_model_summary(client, small_bundle, model_file):
    resp = client.get("/api/v1/model")
    assert resp.status_code == 200
    doc = resp.json()
    assert doc["vocabulary_size"] == small_bundle.vocab.size
    assert doc["ngram_range"] == [1, 3]
    assert set(doc["metrics"]) == {"train", "val", "test"}
    assert doc["train_config"]["seed"] == small_bundle.model.config.seed
    assert doc["model_hash"] == file_digest(model_file)


# ---------------------------------------------------------------- static ui


def test_ui_dir_is_served(model_file, tmp_path):
    ui = tmp_path / "dist"
    ui.mkdir()
    (ui / "index.html").write_text("<h1>whatif</h1>", encoding="utf-8")
    with TestClient(create_app(model_file, ui_dir=ui)) as c:
        assert c.get("/").text == "<h1>whatif</h1>"
        # API routes still win over the static mount.
        assert c.get("/healthz").text == "ok"


def test_missing_ui_dir_is_rejected(model_file, tmp_path):
    with pytest.raises(DataError, match="ui directory"):
        create_app(model_file, ui_dir=tmp_path / "nope")
