"""Tests for the HTTP analysis service."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from bar_explorer import __version__
from bar_explorer.service import MAX_SWEEP_CELLS, create_app

SCENARIO_DIR = Path(__file__).resolve().parent.parent / "scenarios"


@pytest.fixture(scope="module")
def client() -> TestClient:
    return TestClient(create_app())


def load(name: str) -> dict:
    return json.loads((SCENARIO_DIR / f"{name}.json").read_text())


class TestHealth:
    def test_reports_versions(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        body = response.json()
        assert body["status"] == "ok"
        assert body["version"] == __version__
        assert body["schema_version"] == 1


class TestAnalyze:
    def test_paper_defaults(self, client):
        response = client.post("/analyze", json=load("paper-defaults"))
        assert response.status_code == 200
        body = response.json()
        assert body["n_star"] == 199
        assert body["label"] == "ALL"

    def test_mode_field(self, client):
        request = load("paper-defaults")
        request["mode"] = "extended"
        body = client.post("/analyze", json=request).json()
        assert body["mode"] == "extended"
        assert body["breakdown"]["compute_total_s"] == pytest.approx(
            5.09, rel=1e-12
        )

    def test_invalid_field_names_location(self, client):
        request = load("paper-defaults")
        request["hardware"]["tau_decode"] = -1.0
        response = client.post("/analyze", json=request)
        assert response.status_code == 400
        error = response.json()["error"]
        assert "tau_decode" in error["field"] or "tau_decode" in error["message"]

    def test_unknown_field_rejected(self, client):
        request = load("paper-defaults")
        request["surprise"] = 1
        response = client.post("/analyze", json=request)
        assert response.status_code == 400

    def test_statelessness_byte_identical(self, client):
        request = load("paper-defaults")
        first = client.post("/analyze", json=request)
        # interleave a different request to try to perturb any hidden state
        client.post("/analyze", json=load("bandwidth-bound"))
        second = client.post("/analyze", json=request)
        assert first.content == second.content


class TestSweep:
    def test_single_cell(self, client):
        request = load("sweep-small")
        request["sweep"]["cot_range"] = {"start": 100, "stop": 100, "step": 1}
        request["sweep"]["retrieval_range"] = {"start": 2, "stop": 2, "step": 1}
        body = client.post("/sweep", json=request).json()
        assert len(body["points"]) == 1
        assert body["points"][0]["on_frontier"] is True

    def test_twenty_point_payload(self, client):
        body = client.post("/sweep", json=load("sweep-small")).json()
        assert len(body["points"]) == 20
        assert body["frontier_size"] == sum(
            1 for p in body["points"] if p["on_frontier"]
        )

    def test_missing_sweep_section(self, client):
        response = client.post("/sweep", json=load("bandwidth-bound"))
        assert response.status_code == 400
        assert response.json()["error"]["field"] == "sweep"

    def test_malformed_range(self, client):
        request = load("sweep-small")
        request["sweep"]["cot_range"] = {"start": 50, "stop": 0, "step": 1}
        response = client.post("/sweep", json=request)
        assert response.status_code == 400

    def test_oversized_grid_rejected_not_truncated(self, client):
        request = load("sweep-small")
        request["sweep"]["cot_range"] = {"start": 0, "stop": 100_000, "step": 1}
        request["sweep"]["retrieval_range"] = {"start": 0, "stop": 9, "step": 1}
        response = client.post("/sweep", json=request)
        assert response.status_code == 413
        assert str(MAX_SWEEP_CELLS) in response.json()["error"]["message"]


class TestSimulate:
    def test_requires_explicit_seed(self, client):
        request = load("paper-defaults")
        del request["sim"]["seed"]
        response = client.post("/simulate", json=request)
        assert response.status_code == 400
        assert response.json()["error"]["field"] == "sim.seed"

    def test_runs_with_seed(self, client):
        body = client.post("/simulate", json=load("sim-uniform")).json()
        assert body["sim"]["seed"] == 7
        assert body["validation"]["all_ok"] is True

    def test_same_seed_same_response(self, client):
        request = load("sim-lognormal")
        first = client.post("/simulate", json=request)
        second = client.post("/simulate", json=request)
        assert first.content == second.content
