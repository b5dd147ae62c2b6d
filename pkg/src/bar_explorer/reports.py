"""Machine-readable report builders shared by the CLI and the service.

Both interfaces must emit field-identical results for the same scenario, so
all report assembly lives here and each interface only decides how to ship
the resulting plain dict (stdout JSON vs HTTP body).  Reports contain no
timestamps or environment data: byte-determinism given (scenario, seed) is
part of the contract.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import replace
from typing import Any

from .bounds import (
    check_feasibility,
    min_feasible_budget,
    minimal_compliant_design,
    n_star,
)
from .core import (
    BudgetBreakdown,
    CostMode,
    DesignPoint,
    HardwareProfile,
    TaskSpec,
    budget_breakdown,
)
from .pareto import evaluate_grid, pareto_front
from .scenario import Scenario
from .simulator import SimTrace, simulate, trace_summary, validate_trace

SCHEMA_VERSION = 1

FRONTIER_CSV_COLUMNS = (
    "C",
    "R",
    "latency_s",
    "auth_loss_nats",
    "reasoning_deficit_tokens",
    "on_frontier",
)


def resolve_design(scenario: Scenario) -> DesignPoint:
    """The scenario's design, or the minimal compliant one when omitted."""
    if scenario.design is not None:
        return scenario.design
    return minimal_compliant_design(scenario.task)


def default_curve_samples(task: TaskSpec, hw: HardwareProfile) -> tuple[int, ...]:
    """Default n values for the latency-vs-n curve: 21 points spanning past
    both the task size and the feasibility threshold."""
    hi = max(2 * n_star(task, hw), 2 * task.n, 20)
    samples = [round(i * hi / 20) for i in range(21)]
    return tuple(dict.fromkeys(samples))


def latency_curve(
    task: TaskSpec, hw: HardwareProfile, samples: tuple[int, ...]
) -> list[dict[str, Any]]:
    """Minimal-design cost at each sampled input length (theorem-exact)."""
    points = []
    for n in samples:
        probe = TaskSpec(
            n=n,
            budget_T=task.budget_T,
            epsilon_r=task.epsilon_r,
            epsilon_h=task.epsilon_h,
            k_required=task.k_required,
            c1=task.c1,
        )
        breakdown = budget_breakdown(
            minimal_compliant_design(probe), probe, hw, CostMode.THEOREM_EXACT
        )
        points.append(
            {
                "n": n,
                "compute_s": breakdown.compute_total,
                "bandwidth_s": breakdown.bandwidth_total,
                "effective_s": breakdown.effective,
            }
        )
    return points


def _design_dict(design: DesignPoint) -> dict[str, Any]:
    return {
        "cot_tokens": design.cot_tokens,
        "retrieval_calls": design.retrieval_calls,
        "tool_latencies": list(design.tool_latencies),
    }


def _breakdown_dict(breakdown: BudgetBreakdown) -> dict[str, Any]:
    return {
        "model_time_s": breakdown.model_time,
        "retrieval_time_s": breakdown.retrieval_time,
        "tool_time_s": breakdown.tool_time,
        "prefill_time_s": breakdown.prefill_time,
        "compute_total_s": breakdown.compute_total,
        "bandwidth_total_s": breakdown.bandwidth_total,
        "effective_s": breakdown.effective,
        "mode": breakdown.mode.value,
    }


def build_analyze_report(
    scenario: Scenario, mode: CostMode = CostMode.THEOREM_EXACT
) -> dict[str, Any]:
    task, hw = scenario.task, scenario.hardware
    design = resolve_design(scenario)
    breakdown = budget_breakdown(design, task, hw, mode)
    report = check_feasibility(task, design, hw, mode)
    samples = scenario.curve_n or default_curve_samples(task, hw)
    return {
        "schema_version": SCHEMA_VERSION,
        "report": "analyze",
        "name": scenario.name,
        "mode": CostMode(mode).value,
        "design": _design_dict(design),
        "breakdown": _breakdown_dict(breakdown),
        "feasibility": {
            "reasoning_ok": report.reasoning_ok,
            "auth_ok": report.auth_ok,
            "budget_ok": report.budget_ok,
            "feasible": report.feasible,
            "theorem_binding": report.theorem_binding,
            "effective_s": report.effective,
        },
        "n_star": report.n_star,
        "label": report.label,
        "min_feasible_budget_s": min_feasible_budget(task, hw),
        "latency_curve": latency_curve(task, hw, tuple(samples)),
    }


def build_sweep_report(scenario: Scenario) -> dict[str, Any]:
    if scenario.sweep is None:
        raise ValueError("scenario has no sweep section")
    task, hw, sweep = scenario.task, scenario.hardware, scenario.sweep
    points = evaluate_grid(sweep, task, hw)
    frontier = pareto_front(points)
    # Grid cells are uniquely keyed by their (C, R) pair.
    on_front = {
        (p.design.cot_tokens, p.design.retrieval_calls) for p in frontier
    }
    return {
        "schema_version": SCHEMA_VERSION,
        "report": "sweep",
        "name": scenario.name,
        "mode": sweep.mode.value,
        "curve": {"eps_free": sweep.curve.eps_free, "gamma": sweep.curve.gamma},
        "points": [
            {
                "cot_tokens": p.design.cot_tokens,
                "retrieval_calls": p.design.retrieval_calls,
                "latency_s": p.latency,
                "auth_loss_nats": p.auth_loss,
                "reasoning_deficit_tokens": p.reasoning_deficit,
                "on_frontier": (p.design.cot_tokens, p.design.retrieval_calls)
                in on_front,
            }
            for p in points
        ],
        "frontier_size": len(frontier),
    }


def build_simulate_report(
    scenario: Scenario, seed: int | None = None
) -> tuple[dict[str, Any], SimTrace]:
    """Run the simulation for a scenario; returns (report, trace).

    `seed` overrides the scenario's sim seed when given.
    """
    task, hw = scenario.task, scenario.hardware
    design = resolve_design(scenario)
    config = scenario.sim
    if seed is not None:
        config = replace(config, seed=seed)
    trace = simulate(task, design, hw, config)
    summary = trace_summary(trace)
    validation = validate_trace(trace, task, design, hw)
    report = {
        "schema_version": SCHEMA_VERSION,
        "report": "simulate",
        "name": scenario.name,
        "sim": {
            "mode": config.mode.value,
            "seed": config.seed,
            "rng_algorithm": trace.rng_algorithm,
        },
        "design": _design_dict(design),
        "totals": {
            "total_latency_s": trace.total_latency,
            "total_bytes": trace.total_bytes,
            "events": len(trace.events),
        },
        "summary": {
            kind: {
                "seconds": entry.seconds,
                "bytes": entry.bytes,
                "share": entry.share,
            }
            for kind, entry in summary.items()
        },
        "validation": {
            "total_above_effective": validation.total_above_effective,
            "decode_above_reasoning_lb": validation.decode_above_reasoning_lb,
            "retrieval_above_auth_lb": validation.retrieval_above_auth_lb,
            "all_ok": validation.all_ok,
            "trace_total_s": validation.trace_total,
            "analytic_effective_s": validation.analytic_effective,
            "decode_seconds": validation.decode_seconds,
            "reasoning_lb_s": validation.reasoning_lb,
            "retrieval_seconds": validation.retrieval_seconds,
            "auth_lb_s": validation.auth_lb,
        },
    }
    return report, trace


def frontier_csv(report: dict[str, Any]) -> str:
    """Frontier CSV (full float precision) from a sweep report."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(FRONTIER_CSV_COLUMNS)
    for point in report["points"]:
        writer.writerow(
            [
                point["cot_tokens"],
                point["retrieval_calls"],
                repr(point["latency_s"]),
                repr(point["auth_loss_nats"]),
                point["reasoning_deficit_tokens"],
                "true" if point["on_frontier"] else "false",
            ]
        )
    return buf.getvalue()


def trace_jsonl(trace: SimTrace) -> str:
    """Line-delimited trace: one header record, then one record per event."""
    lines = [
        json.dumps(
            {
                "record": "header",
                "schema": "bar-trace/v1",
                "rng_algorithm": trace.rng_algorithm,
                "seed": trace.seed,
                "events": len(trace.events),
                "total_latency_s": trace.total_latency,
                "total_bytes": trace.total_bytes,
            }
        )
    ]
    for event in trace.events:
        lines.append(
            json.dumps(
                {
                    "record": "event",
                    "kind": event.kind.value,
                    "start": event.start,
                    "duration": event.duration,
                    "bytes": event.bytes,
                }
            )
        )
    return "\n".join(lines) + "\n"


def dump_json(report: dict[str, Any]) -> str:
    """Canonical machine-report encoding: sorted keys, full precision."""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
