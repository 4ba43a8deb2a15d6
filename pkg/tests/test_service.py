from __future__ import annotations

import io
import json

import pytest
from fastapi.testclient import TestClient

from elicitor import fixture_path
from elicitor.cli import run
from elicitor.profiles import load_profile, profile_to_payload
from elicitor.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def payload_for(name, dataset):
    profile, decisions = load_profile(fixture_path(name), dataset)
    return profile_to_payload(profile, decisions)


def test_health(client):
    body = client.get("/api/health").json()
    assert body["status"] == "ok"
    assert body["dataset_version"] == "1.0.0"


def test_dataset_meta(client):
    body = client.get("/api/dataset/meta").json()
    assert body["threshold"] == "0.5"
    assert body["techniques"] >= 20


def test_taxonomy_document(client):
    body = client.get("/api/taxonomy").json()
    assert {t["category"] for t in body["techniques"]} == {
        "traditional", "collaborative", "cognitive", "observational", "other",
    }
    assert set(body["dimensions"]) == {"project", "people", "process"}
    models = body["dimensions"]["process"][0]["values"]
    assert {v["id"] for v in models} >= {"waterfall", "prototyping", "agile"}


def test_taxonomy_deterministic(client):
    assert client.get("/api/taxonomy").content == client.get("/api/taxonomy").content


def test_recommend_ipos(client, dataset):
    response = client.post("/api/recommend", json=payload_for("ipos", dataset))
    assert response.status_code == 200
    body = response.json()
    assert sorted(body["final"]) == sorted([
        "interview", "focus-group", "workshop", "observation",
        "ethnography", "prototyping", "models",
    ])
    assert body["dataset_version"] == "1.0.0"
    assert body["trace"]


def test_recommend_unknown_trait_is_400(client):
    response = client.post("/api/recommend", json={
        "label": "bad",
        "people": {"stakeholder": ["psychic"]},
    })
    assert response.status_code == 400
    body = response.json()
    assert body["code"] == "TAXONOMY"
    assert body["field"] == "people.stakeholder"
    assert "psychic" in body["message"]


def test_recommend_exclude_absent_is_400(client):
    response = client.post("/api/recommend", json={
        "label": "bad",
        "project": {"size": "large"},
        "feasibility": [{
            "technique": "laddering", "verdict": "exclude",
            "decided_by": "analyst-view", "reason": "never selected",
        }],
    })
    assert response.status_code == 400
    assert response.json()["code"] == "EXCLUDE_ABSENT"


def test_whatif_identical_profiles(client, dataset):
    p = payload_for("ipos", dataset)
    body = client.post("/api/whatif", json={"profile_a": p, "profile_b": p}).json()
    assert body["added"] == [] and body["removed"] == []


def test_whatif_swapping_profiles_swaps_added_removed(client, dataset):
    a, b = payload_for("ipos", dataset), payload_for("osm", dataset)
    forward = client.post("/api/whatif", json={"profile_a": a, "profile_b": b}).json()
    backward = client.post("/api/whatif", json={"profile_a": b, "profile_b": a}).json()
    assert forward["added"] == backward["removed"]
    assert forward["removed"] == backward["added"]
    assert forward["unchanged"] == backward["unchanged"]


def test_whatif_superset_removes_nothing(client, dataset):
    small = payload_for("ipos", dataset)
    bigger = json.loads(json.dumps(small))
    bigger["people"]["stakeholder"].append("silent")
    body = client.post("/api/whatif",
                       json={"profile_a": small, "profile_b": bigger}).json()
    assert body["removed"] == []


def test_statelessness_interleaving(client, dataset):
    baseline = {
        name: client.post("/api/recommend", json=payload_for(name, dataset)).json()
        for name in ("ipos", "osm", "bhoomi")
    }
    for name in ("bhoomi", "ipos", "osm", "ipos", "bhoomi"):
        again = client.post("/api/recommend", json=payload_for(name, dataset)).json()
        assert again == baseline[name]


@pytest.mark.parametrize("name", ["ipos", "osm", "bhoomi"])
def test_cli_service_parity(client, dataset, name):
    out = io.StringIO()
    assert run(["recommend", str(fixture_path(name)), "--format", "structured"],
               out=out, err=io.StringIO()) == 0
    cli_doc = json.loads(out.getvalue())
    api_doc = client.post("/api/recommend", json=payload_for(name, dataset)).json()
    assert api_doc == cli_doc
