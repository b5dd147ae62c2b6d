"""Tests for scenario parsing, validation, and round-tripping."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from bar_explorer import (
    AuthCurve,
    ConstantLatency,
    LogNormalLatency,
    ScenarioError,
    SimMode,
    UniformLatency,
    parse_scenario,
    scenario_from_dict,
    serialize_scenario,
)

SCENARIO_DIR = Path(__file__).resolve().parent.parent / "scenarios"

MINIMAL = {
    "version": 1,
    "hardware": {
        "tau_decode": 0.05,
        "a_prefill": 1e-6,
        "rho_retrieval": 0.04,
        "mu_decode": 2_000_000,
        "beta_retrieval": 1_000_000,
        "b_max": 1_000_000_000,
    },
    "task": {"n": 100, "budget_T": 10.0},
}


def doc(**overrides) -> str:
    data = json.loads(json.dumps(MINIMAL))
    data.update(overrides)
    return json.dumps(data)


class TestParsing:
    def test_minimal_scenario_gets_defaults(self):
        scenario = parse_scenario(doc())
        assert scenario.design is None
        assert scenario.sweep is None
        assert scenario.sim.mode is SimMode.DETERMINISTIC
        assert scenario.sim.seed == 0
        assert scenario.curve == AuthCurve()
        assert scenario.task.k_required == 1
        assert scenario.task.c1 == 1.0

    def test_invalid_hardware_names_field(self):
        bad = json.loads(doc())
        bad["hardware"]["b_max"] = 0
        with pytest.raises(ScenarioError, match="b_max"):
            parse_scenario(json.dumps(bad))

    def test_unknown_top_level_field_rejected(self):
        with pytest.raises(ScenarioError, match="unknown field"):
            parse_scenario(doc(extra_knob=1))

    def test_unknown_nested_field_rejected(self):
        bad = json.loads(doc())
        bad["task"]["surprise"] = 3
        with pytest.raises(ScenarioError, match="task.surprise"):
            parse_scenario(json.dumps(bad))

    def test_version_required_in_files(self):
        data = json.loads(doc())
        del data["version"]
        with pytest.raises(ScenarioError, match="version"):
            parse_scenario(json.dumps(data))

    def test_unsupported_version_rejected(self):
        with pytest.raises(ScenarioError, match="version"):
            parse_scenario(doc(version=2))

    def test_version_optional_for_request_bodies(self):
        data = json.loads(doc())
        del data["version"]
        scenario = scenario_from_dict(data)
        assert scenario.version == 1

    def test_malformed_json(self):
        with pytest.raises(ScenarioError, match="JSON"):
            parse_scenario("{nope")

    def test_integral_floats_accepted_for_byte_fields(self):
        data = json.loads(doc())
        data["hardware"]["mu_decode"] = 2e6
        scenario = parse_scenario(json.dumps(data))
        assert scenario.hardware.mu_decode == 2_000_000

    def test_non_integral_byte_count_rejected(self):
        data = json.loads(doc())
        data["hardware"]["mu_decode"] = 2.5
        with pytest.raises(ScenarioError, match="mu_decode"):
            parse_scenario(json.dumps(data))

    def test_bool_is_not_a_number(self):
        data = json.loads(doc())
        data["task"]["budget_T"] = True
        with pytest.raises(ScenarioError, match="budget_T"):
            parse_scenario(json.dumps(data))

    def test_design_section(self):
        scenario = parse_scenario(
            doc(design={"cot_tokens": 10, "retrieval_calls": 2, "tool_latencies": [0.1]})
        )
        assert scenario.design.tool_latencies == (0.1,)

    def test_sim_dist_kinds(self):
        base = json.loads(doc())
        base["sim"] = {
            "mode": "stochastic",
            "retrieval_latency_dist": {"kind": "uniform", "low": 0.01, "high": 0.05},
            "seed": 3,
        }
        scenario = parse_scenario(json.dumps(base))
        assert scenario.sim.retrieval_latency_dist == UniformLatency(0.01, 0.05)

        base["sim"]["retrieval_latency_dist"] = {
            "kind": "lognormal",
            "location": 0.05,
            "scale": 0.4,
        }
        scenario = parse_scenario(json.dumps(base))
        assert scenario.sim.retrieval_latency_dist == LogNormalLatency(0.05, 0.4)

        base["sim"] = {"mode": "deterministic",
                       "retrieval_latency_dist": {"kind": "constant", "value": 0.04}}
        scenario = parse_scenario(json.dumps(base))
        assert scenario.sim.retrieval_latency_dist == ConstantLatency(0.04)

    def test_unknown_dist_kind_rejected(self):
        base = json.loads(doc())
        base["sim"] = {
            "mode": "stochastic",
            "retrieval_latency_dist": {"kind": "pareto", "alpha": 2},
            "seed": 1,
        }
        with pytest.raises(ScenarioError, match="kind"):
            parse_scenario(json.dumps(base))

    def test_deterministic_with_random_dist_rejected(self):
        base = json.loads(doc())
        base["sim"] = {
            "mode": "deterministic",
            "retrieval_latency_dist": {"kind": "uniform", "low": 0.01, "high": 0.05},
        }
        with pytest.raises(ScenarioError, match="sim"):
            parse_scenario(json.dumps(base))

    def test_curve_gamma_domain(self):
        with pytest.raises(ScenarioError, match="gamma"):
            parse_scenario(doc(curve={"eps_free": 0.8, "gamma": 1.5}))

    def test_curve_n_validation(self):
        scenario = parse_scenario(doc(curve_n=[0, 10, 20]))
        assert scenario.curve_n == (0, 10, 20)
        with pytest.raises(ScenarioError, match="curve_n"):
            parse_scenario(doc(curve_n=[]))
        with pytest.raises(ScenarioError, match="curve_n"):
            parse_scenario(doc(curve_n=[1, -2]))

    def test_sweep_requires_ranges(self):
        with pytest.raises(ScenarioError, match="cot_range"):
            parse_scenario(doc(sweep={"retrieval_range": {"start": 0, "stop": 1}}))


class TestRoundTrip:
    def test_paper_defaults_round_trips(self):
        text = (SCENARIO_DIR / "paper-defaults.json").read_text()
        first = parse_scenario(text)
        second = parse_scenario(serialize_scenario(first))
        assert first == second

    @pytest.mark.parametrize(
        "path", sorted(SCENARIO_DIR.glob("*.json")), ids=lambda p: p.stem
    )
    def test_all_shipped_scenarios_round_trip(self, path):
        first = parse_scenario(path.read_text())
        second = parse_scenario(serialize_scenario(first))
        assert first == second
        third = parse_scenario(serialize_scenario(second))
        assert second == third

    def test_shipped_scenario_count(self):
        assert len(list(SCENARIO_DIR.glob("*.json"))) == 20
