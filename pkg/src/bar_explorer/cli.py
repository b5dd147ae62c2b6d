"""Command-line entry point.

Subcommands: analyze, sweep, simulate, serve.  Reports go to stdout (or the
--out file); diagnostics and errors go to stderr only, so the report stream
stays machine-consumable.  Exit status: 0 on success, 1 when
--fail-on-infeasible is set and the analyzed design misses a constraint,
2 on any input error.

Set BAR_EXPLORER_LOG=debug|info|warning|error to control diagnostic
verbosity.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import replace
from typing import Any

from .core import CostMode
from .reports import (
    build_analyze_report,
    build_simulate_report,
    build_sweep_report,
    dump_json,
    frontier_csv,
    trace_jsonl,
)
from .scenario import Scenario, ScenarioError, parse_scenario

log = logging.getLogger("bar_explorer")

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INPUT_ERROR = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bar-explorer",
        description=(
            "Analyze the budget/authenticity/reasoning trade-off of an LLM "
            "serving design: cost breakdowns, feasibility thresholds, "
            "design sweeps, and a validating event simulation."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, needs_scenario: bool = True) -> None:
        if needs_scenario:
            p.add_argument(
                "--scenario", required=True, help="path to a scenario JSON file"
            )
        p.add_argument(
            "--format",
            choices=("human", "machine"),
            default="human",
            help="report format (default: human)",
        )
        p.add_argument("--out", help="write the report artifact to this path")

    analyze = sub.add_parser("analyze", help="cost breakdown and feasibility")
    add_common(analyze)
    analyze.add_argument(
        "--mode",
        choices=(CostMode.THEOREM_EXACT.value, CostMode.EXTENDED.value),
        default=CostMode.THEOREM_EXACT.value,
        help="cost-model mode (default: theorem-exact)",
    )
    analyze.add_argument(
        "--fail-on-infeasible",
        action="store_true",
        help="exit with status 1 when any constraint is unsatisfied",
    )

    sweep = sub.add_parser("sweep", help="grid sweep and Pareto frontier")
    add_common(sweep)
    sweep.add_argument(
        "--mode",
        choices=(CostMode.THEOREM_EXACT.value, CostMode.EXTENDED.value),
        default=None,
        help="override the sweep section's cost-model mode",
    )

    simulate = sub.add_parser("simulate", help="run the event simulation")
    add_common(simulate)
    simulate.add_argument(
        "--seed", type=int, default=None, help="override the scenario's sim seed"
    )

    serve = sub.add_parser("serve", help="start the analysis service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8787)
    return parser


def _configure_logging() -> None:
    level_name = os.environ.get("BAR_EXPLORER_LOG", "warning").upper()
    level = getattr(logging, level_name, None)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level)


def _load_scenario(path: str) -> Scenario:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ScenarioError(path, f"cannot read scenario file: {exc}") from exc
    return parse_scenario(text)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(value: float) -> str:
    return f"{value:.6g}"


def _analyze_human(report: dict[str, Any]) -> str:
    b = report["breakdown"]
    f = report["feasibility"]
    d = report["design"]
    lines = []
    if report["name"]:
        lines.append(f"scenario: {report['name']}")
    lines += [
        f"mode: {report['mode']}",
        f"design: C={d['cot_tokens']} R={d['retrieval_calls']} "
        f"tools={len(d['tool_latencies'])}",
        "budget breakdown (s):",
        f"  model      {_fmt(b['model_time_s'])}",
        f"  retrieval  {_fmt(b['retrieval_time_s'])}",
        f"  tool       {_fmt(b['tool_time_s'])}",
        f"  prefill    {_fmt(b['prefill_time_s'])}",
        f"  compute    {_fmt(b['compute_total_s'])}",
        f"  bandwidth  {_fmt(b['bandwidth_total_s'])}",
        f"  effective  {_fmt(b['effective_s'])}",
        "constraints:",
        f"  reasoning     {'ok' if f['reasoning_ok'] else 'VIOLATED'}",
        f"  authenticity  {'ok' if f['auth_ok'] else 'VIOLATED'}",
        f"  budget        {'ok' if f['budget_ok'] else 'VIOLATED'} "
        f"(effective {_fmt(f['effective_s'])})",
        f"label: {report['label']}",
        f"n*: {report['n_star']}",
        f"theorem binding: {'yes' if f['theorem_binding'] else 'no'}",
        f"min feasible budget: {_fmt(report['min_feasible_budget_s'])} s",
    ]
    return "\n".join(lines) + "\n"


def _simulate_human(report: dict[str, Any]) -> str:
    totals = report["totals"]
    lines = [
        f"simulate: mode={report['sim']['mode']} seed={report['sim']['seed']} "
        f"rng={report['sim']['rng_algorithm']}",
        f"events: {totals['events']}  total {_fmt(totals['total_latency_s'])} s  "
        f"{totals['total_bytes']} bytes",
        "per-kind breakdown:",
    ]
    for kind, entry in report["summary"].items():
        lines.append(
            f"  {kind:<13} {_fmt(entry['seconds'])} s  {entry['bytes']} B  "
            f"share {_fmt(entry['share'])}"
        )
    v = report["validation"]
    lines += [
        "validation against analytic bounds:",
        f"  total >= effective      {'pass' if v['total_above_effective'] else 'FAIL'} "
        f"({_fmt(v['trace_total_s'])} >= {_fmt(v['analytic_effective_s'])})",
        f"  decode >= reasoning lb  {'pass' if v['decode_above_reasoning_lb'] else 'FAIL'} "
        f"({_fmt(v['decode_seconds'])} >= {_fmt(v['reasoning_lb_s'])})",
        f"  retrieval >= auth lb    {'pass' if v['retrieval_above_auth_lb'] else 'FAIL'} "
        f"({_fmt(v['retrieval_seconds'])} >= {_fmt(v['auth_lb_s'])})",
    ]
    return "\n".join(lines) + "\n"


def _run_analyze(args: argparse.Namespace) -> int:
    scenario = _load_scenario(args.scenario)
    report = build_analyze_report(scenario, CostMode(args.mode))
    text = dump_json(report) if args.format == "machine" else _analyze_human(report)
    _emit(text, args.out)
    if args.fail_on_infeasible and not report["feasibility"]["feasible"]:
        log.info("design infeasible (label %s)", report["label"])
        return EXIT_INFEASIBLE
    return EXIT_OK


def _run_sweep(args: argparse.Namespace) -> int:
    scenario = _load_scenario(args.scenario)
    if scenario.sweep is None:
        raise ScenarioError("sweep", "missing section required by subcommand")
    if args.mode is not None:
        scenario = replace(
            scenario, sweep=replace(scenario.sweep, mode=CostMode(args.mode))
        )
    report = build_sweep_report(scenario)
    text = dump_json(report) if args.format == "machine" else frontier_csv(report)
    _emit(text, args.out)
    return EXIT_OK


def _run_simulate(args: argparse.Namespace) -> int:
    scenario = _load_scenario(args.scenario)
    report, trace = build_simulate_report(scenario, seed=args.seed)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(trace_jsonl(trace))
    text = dump_json(report) if args.format == "machine" else _simulate_human(report)
    sys.stdout.write(text)
    return EXIT_OK


def _run_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "analyze": _run_analyze,
        "sweep": _run_sweep,
        "simulate": _run_simulate,
        "serve": _run_serve,
    }
    try:
        return handlers[args.command](args)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
