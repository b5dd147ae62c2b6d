"""Stateless HTTP analysis service.

Endpoints mirror the CLI subcommands and share their report builders, so a
service response is field-identical to the corresponding CLI machine report.
Request bodies are scenario documents (the `version` field may be omitted);
`/analyze` additionally accepts a top-level `mode`.  Handlers hold no state:
no request can affect a later response.

Guard rails: sweeps above 100,000 grid cells are rejected outright rather
than truncated, and `/simulate` requires an explicit seed in the request so
every simulated result is reproducible from its request body alone.
"""

from __future__ import annotations

from typing import Any, Mapping

from fastapi import Body, FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .core import CostMode
from .reports import (
    SCHEMA_VERSION,
    build_analyze_report,
    build_simulate_report,
    build_sweep_report,
)
from .scenario import Scenario, ScenarioError, scenario_from_dict

MAX_SWEEP_CELLS = 100_000


def _error(status: int, field: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"error": {"field": field, "message": message}},
    )


def _parse_body(payload: Any) -> Scenario:
    if not isinstance(payload, Mapping):
        raise ScenarioError("<body>", "request body must be a JSON object")
    return scenario_from_dict(payload)


def create_app() -> FastAPI:
    app = FastAPI(title="bar-explorer", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/health")
    def health() -> dict[str, Any]:
        return {
            "status": "ok",
            "version": __version__,
            "schema_version": SCHEMA_VERSION,
        }

    @app.post("/analyze")
    def analyze(payload: dict[str, Any] = Body(...)) -> JSONResponse:
        body = dict(payload)
        mode_text = body.pop("mode", CostMode.THEOREM_EXACT.value)
        try:
            mode = CostMode(mode_text)
        except ValueError:
            return _error(400, "mode", "must be one of: theorem-exact, extended")
        try:
            scenario = _parse_body(body)
        except ScenarioError as exc:
            return _error(400, exc.path, exc.message)
        return JSONResponse(content=build_analyze_report(scenario, mode))

    @app.post("/sweep")
    def sweep(payload: dict[str, Any] = Body(...)) -> JSONResponse:
        try:
            scenario = _parse_body(payload)
        except ScenarioError as exc:
            return _error(400, exc.path, exc.message)
        if scenario.sweep is None:
            return _error(400, "sweep", "missing required section")
        if scenario.sweep.cells > MAX_SWEEP_CELLS:
            return _error(
                413,
                "sweep",
                f"grid has {scenario.sweep.cells} cells, "
                f"limit is {MAX_SWEEP_CELLS}",
            )
        return JSONResponse(content=build_sweep_report(scenario))

    @app.post("/simulate")
    def simulate(payload: dict[str, Any] = Body(...)) -> JSONResponse:
        if not isinstance(payload, Mapping) or not isinstance(
            payload.get("sim"), Mapping
        ) or "seed" not in payload["sim"]:
            return _error(
                400, "sim.seed", "an explicit seed is required for simulation"
            )
        try:
            scenario = _parse_body(payload)
        except ScenarioError as exc:
            return _error(400, exc.path, exc.message)
        report, _trace = build_simulate_report(scenario)
        return JSONResponse(content=report)

    return app
