"""Scenario documents: the one input format for the CLI and the service.

A scenario is a JSON object with a mandatory schema `version` (currently 1),
mandatory `hardware` and `task` sections, and optional `design`, `sweep`,
`sim`, `curve`, and `curve_n` sections.  Unknown fields are rejected at every
level rather than ignored: a silently dropped typo in a hardware constant
would invalidate every feasibility verdict downstream.

Parsing is strict and total: a returned Scenario has already passed every
type invariant, and errors carry the dotted path of the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Mapping

from .authenticity import AuthCurve
from .core import CostMode, DesignPoint, HardwareProfile, TaskSpec
from .pareto import GridRange, SweepSpec
from .simulator import (
    ConstantLatency,
    LogNormalLatency,
    RetrievalLatencyDist,
    SimConfig,
    SimMode,
    UniformLatency,
)

SCHEMA_VERSION = 1


class ScenarioError(ValueError):
    """A scenario document failed to parse or violated an invariant."""

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}" if path else message)


@dataclass(frozen=True)
class Scenario:
    hardware: HardwareProfile
    task: TaskSpec
    design: DesignPoint | None = None
    sweep: SweepSpec | None = None
    sim: SimConfig = SimConfig()
    curve: AuthCurve = AuthCurve()
    curve_n: tuple[int, ...] | None = None
    name: str | None = None
    version: int = SCHEMA_VERSION


class _Section:
    """A mapping view that tracks consumed keys and rejects leftovers."""

    def __init__(self, data: Mapping[str, Any], path: str):
        if not isinstance(data, Mapping):
            raise ScenarioError(path or "<document>", "must be an object")
        self.data = data
        self.path = path
        self.seen: set[str] = set()

    def _child(self, key: str) -> str:
        return f"{self.path}.{key}" if self.path else key

    def has(self, key: str) -> bool:
        return key in self.data

    def raw(self, key: str, default: Any = None) -> Any:
        self.seen.add(key)
        return self.data.get(key, default)

    def require(self, key: str) -> Any:
        if key not in self.data:
            raise ScenarioError(self._child(key), "missing required field")
        return self.raw(key)

    def number(self, key: str, default: float | None = None) -> float:
        value = self.require(key) if default is None else self.raw(key, default)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ScenarioError(self._child(key), "must be a number")
        return float(value)

    def integer(self, key: str, default: int | None = None) -> int:
        value = self.require(key) if default is None else self.raw(key, default)
        if isinstance(value, bool):
            raise ScenarioError(self._child(key), "must be an integer")
        if isinstance(value, int):
            return value
        if isinstance(value, float) and value.is_integer():
            return int(value)
        raise ScenarioError(self._child(key), "must be an integer")

    def string(self, key: str, default: str | None = None) -> str:
        value = self.require(key) if default is None else self.raw(key, default)
        if not isinstance(value, str):
            raise ScenarioError(self._child(key), "must be a string")
        return value

    def section(self, key: str) -> "_Section | None":
        if key not in self.data:
            return None
        return _Section(self.require(key), self._child(key))

    def finish(self) -> None:
        unknown = set(self.data) - self.seen
        if unknown:
            name = sorted(unknown)[0]
            raise ScenarioError(self._child(name), "unknown field")


def _build(path: str, factory, **kwargs):
    # Re-raise invariant violations from the domain types with the section path.
    try:
        return factory(**kwargs)
    except ScenarioError:
        raise
    except ValueError as exc:
        raise ScenarioError(path, str(exc)) from exc


def _parse_hardware(sec: _Section) -> HardwareProfile:
    hw = _build(
        sec.path,
        HardwareProfile,
        tau_decode=sec.number("tau_decode"),
        a_prefill=sec.number("a_prefill"),
        rho_retrieval=sec.number("rho_retrieval"),
        mu_decode=sec.integer("mu_decode"),
        beta_retrieval=sec.integer("beta_retrieval"),
        b_max=sec.integer("b_max"),
    )
    sec.finish()
    return hw


def _parse_task(sec: _Section) -> TaskSpec:
    task = _build(
        sec.path,
        TaskSpec,
        n=sec.integer("n"),
        budget_T=sec.number("budget_T"),
        epsilon_r=sec.number("epsilon_r", 0.1),
        epsilon_h=sec.number("epsilon_h", 0.1),
        k_required=sec.integer("k_required", 1),
        c1=sec.number("c1", 1.0),
    )
    sec.finish()
    return task


def _parse_design(sec: _Section) -> DesignPoint:
    tools = sec.raw("tool_latencies", [])
    if not isinstance(tools, (list, tuple)) or not all(
        isinstance(t, (int, float)) and not isinstance(t, bool) for t in tools
    ):
        raise ScenarioError(f"{sec.path}.tool_latencies", "must be a list of numbers")
    design = _build(
        sec.path,
        DesignPoint,
        cot_tokens=sec.integer("cot_tokens"),
        retrieval_calls=sec.integer("retrieval_calls"),
        tool_latencies=tuple(float(t) for t in tools),
    )
    sec.finish()
    return design


def _parse_range(sec: _Section) -> GridRange:
    rng = _build(
        sec.path,
        GridRange,
        start=sec.integer("start"),
        stop=sec.integer("stop"),
        step=sec.integer("step", 1),
    )
    sec.finish()
    return rng


def _parse_sweep(sec: _Section, curve: AuthCurve) -> SweepSpec:
    cot = sec.section("cot_range")
    retrieval = sec.section("retrieval_range")
    if cot is None:
        raise ScenarioError(f"{sec.path}.cot_range", "missing required field")
    if retrieval is None:
        raise ScenarioError(f"{sec.path}.retrieval_range", "missing required field")
    mode = _parse_mode(sec.string("mode", CostMode.THEOREM_EXACT.value), f"{sec.path}.mode")
    sweep = SweepSpec(
        cot_range=_parse_range(cot),
        retrieval_range=_parse_range(retrieval),
        curve=curve,
        mode=mode,
    )
    sec.finish()
    return sweep


def _parse_dist(sec: _Section) -> RetrievalLatencyDist:
    kind = sec.string("kind")
    if kind == "constant":
        dist = _build(sec.path, ConstantLatency, value=sec.number("value"))
    elif kind == "uniform":
        dist = _build(
            sec.path, UniformLatency, low=sec.number("low"), high=sec.number("high")
        )
    elif kind == "lognormal":
        dist = _build(
            sec.path,
            LogNormalLatency,
            location=sec.number("location"),
            scale=sec.number("scale"),
        )
    else:
        raise ScenarioError(
            f"{sec.path}.kind",
            "must be one of: constant, uniform, lognormal",
        )
    sec.finish()
    return dist


def _parse_sim(sec: _Section) -> SimConfig:
    mode_text = sec.string("mode", SimMode.DETERMINISTIC.value)
    try:
        mode = SimMode(mode_text)
    except ValueError:
        raise ScenarioError(
            f"{sec.path}.mode", "must be one of: deterministic, stochastic"
        ) from None
    dist_sec = sec.section("retrieval_latency_dist")
    dist = _parse_dist(dist_sec) if dist_sec is not None else None
    sim = _build(
        sec.path,
        SimConfig,
        mode=mode,
        retrieval_latency_dist=dist,
        seed=sec.integer("seed", 0),
    )
    sec.finish()
    return sim


def _parse_curve(sec: _Section) -> AuthCurve:
    curve = _build(
        sec.path,
        AuthCurve,
        eps_free=sec.number("eps_free"),
        gamma=sec.number("gamma"),
    )
    sec.finish()
    return curve


def _parse_mode(text: str, path: str) -> CostMode:
    try:
        return CostMode(text)
    except ValueError:
        raise ScenarioError(
            path, "must be one of: theorem-exact, extended"
        ) from None


def scenario_from_dict(data: Mapping[str, Any], require_version: bool = False) -> Scenario:
    """Validate a decoded scenario object into a Scenario value."""
    root = _Section(data, "")
    if require_version or root.has("version"):
        version = root.integer("version")
        if version != SCHEMA_VERSION:
            raise ScenarioError("version", f"unsupported schema version {version}")
    name = root.string("name") if root.has("name") else None

    hardware_sec = root.section("hardware")
    if hardware_sec is None:
        raise ScenarioError("hardware", "missing required section")
    task_sec = root.section("task")
    if task_sec is None:
        raise ScenarioError("task", "missing required section")
    hardware = _parse_hardware(hardware_sec)
    task = _parse_task(task_sec)

    design_sec = root.section("design")
    design = _parse_design(design_sec) if design_sec is not None else None

    curve_sec = root.section("curve")
    curve = _parse_curve(curve_sec) if curve_sec is not None else AuthCurve()

    sweep_sec = root.section("sweep")
    sweep = _parse_sweep(sweep_sec, curve) if sweep_sec is not None else None

    sim_sec = root.section("sim")
    sim = _parse_sim(sim_sec) if sim_sec is not None else SimConfig()

    curve_n: tuple[int, ...] | None = None
    if root.has("curve_n"):
        raw = root.raw("curve_n")
        if (
            not isinstance(raw, (list, tuple))
            or not raw
            or not all(isinstance(v, int) and not isinstance(v, bool) and v >= 0 for v in raw)
        ):
            raise ScenarioError(
                "curve_n", "must be a non-empty list of integers >= 0"
            )
        curve_n = tuple(raw)

    root.finish()
    return Scenario(
        hardware=hardware,
        task=task,
        design=design,
        sweep=sweep,
        sim=sim,
        curve=curve,
        curve_n=curve_n,
        name=name,
        version=SCHEMA_VERSION,
    )


def parse_scenario(text: str) -> Scenario:
    """Parse scenario file contents (schema v1, version field required)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError("<document>", f"not valid JSON: {exc}") from exc
    return scenario_from_dict(data, require_version=True)


def scenario_to_dict(scenario: Scenario) -> dict[str, Any]:
    """Canonical plain-object form of a scenario (inverse of parsing)."""
    hw = scenario.hardware
    task = scenario.task
    out: dict[str, Any] = {"version": scenario.version}
    if scenario.name is not None:
        out["name"] = scenario.name
    out["hardware"] = {
        "tau_decode": hw.tau_decode,
        "a_prefill": hw.a_prefill,
        "rho_retrieval": hw.rho_retrieval,
        "mu_decode": hw.mu_decode,
        "beta_retrieval": hw.beta_retrieval,
        "b_max": hw.b_max,
    }
    out["task"] = {
        "n": task.n,
        "budget_T": task.budget_T,
        "epsilon_r": task.epsilon_r,
        "epsilon_h": task.epsilon_h,
        "k_required": task.k_required,
        "c1": task.c1,
    }
    if scenario.design is not None:
        out["design"] = {
            "cot_tokens": scenario.design.cot_tokens,
            "retrieval_calls": scenario.design.retrieval_calls,
            "tool_latencies": list(scenario.design.tool_latencies),
        }
    if scenario.sweep is not None:
        out["sweep"] = {
            "cot_range": _range_to_dict(scenario.sweep.cot_range),
            "retrieval_range": _range_to_dict(scenario.sweep.retrieval_range),
            "mode": scenario.sweep.mode.value,
        }
    sim: dict[str, Any] = {"mode": SimMode(scenario.sim.mode).value, "seed": scenario.sim.seed}
    dist = scenario.sim.retrieval_latency_dist
    if dist is not None:
        sim["retrieval_latency_dist"] = _dist_to_dict(dist)
    out["sim"] = sim
    out["curve"] = {
        "eps_free": scenario.curve.eps_free,
        "gamma": scenario.curve.gamma,
    }
    if scenario.curve_n is not None:
        out["curve_n"] = list(scenario.curve_n)
    return out


def serialize_scenario(scenario: Scenario) -> str:
    return json.dumps(scenario_to_dict(scenario), indent=2) + "\n"


def _range_to_dict(rng: GridRange) -> dict[str, int]:
    return {"start": rng.start, "stop": rng.stop, "step": rng.step}


def _dist_to_dict(dist: RetrievalLatencyDist) -> dict[str, Any]:
    if isinstance(dist, ConstantLatency):
        return {"kind": "constant", "value": dist.value}
    if isinstance(dist, UniformLatency):
        return {"kind": "uniform", "low": dist.low, "high": dist.high}
    return {"kind": "lognormal", "location": dist.location, "scale": dist.scale}
