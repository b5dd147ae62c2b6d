"""Analyzer and simulator for the budget/authenticity/reasoning trade-off
in LLM serving.

The library evaluates a closed-form inference cost model (quadratic prefill,
linear decode, fixed-latency retrieval, and a memory-bandwidth roofline),
derives feasibility thresholds over input length, classifies designs by
which of the three constraints they satisfy, sweeps design knobs for Pareto
frontiers, and cross-checks the analytic bounds with a discrete-event
simulation.
"""

__version__ = "0.1.0"

from .authenticity import (
    AlphabetMismatchError,
    AuthCurve,
    DEFAULT_AUTH_CURVE,
    DiscreteDistribution,
    DistributionError,
    UnsupportedMassError,
    auth_loss,
    auth_response_curve,
    kl_divergence,
    min_retrievals_for,
)
from .bounds import (
    FeasibilityReport,
    authenticity_budget_lb,
    check_feasibility,
    classify_design,
    min_cot_tokens,
    min_feasible_budget,
    minimal_compliant_design,
    n_star,
    reasoning_budget_lb,
)
from .core import (
    BudgetBreakdown,
    CostMode,
    DEFAULT_HARDWARE,
    DesignPoint,
    HardwareProfile,
    TaskSpec,
    bandwidth_time,
    budget_breakdown,
    decode_time,
    effective_latency,
    prefill_time,
)
from .pareto import (
    EvaluatedPoint,
    GridRange,
    SweepSpec,
    dominates,
    evaluate_grid,
    pareto_front,
)
from .scenario import (
    Scenario,
    ScenarioError,
    parse_scenario,
    scenario_from_dict,
    scenario_to_dict,
    serialize_scenario,
)
from .simulator import (
    ConstantLatency,
    EventKind,
    LogNormalLatency,
    SimConfig,
    SimEvent,
    SimMode,
    SimTrace,
    UniformLatency,
    simulate,
    trace_summary,
    validate_trace,
)

__all__ = [
    "AlphabetMismatchError",
    "AuthCurve",
    "BudgetBreakdown",
    "ConstantLatency",
    "CostMode",
    "DEFAULT_AUTH_CURVE",
    "DEFAULT_HARDWARE",
    "DesignPoint",
    "DiscreteDistribution",
    "DistributionError",
    "EvaluatedPoint",
    "EventKind",
    "FeasibilityReport",
    "GridRange",
    "HardwareProfile",
    "LogNormalLatency",
    "Scenario",
    "ScenarioError",
    "SimConfig",
    "SimEvent",
    "SimMode",
    "SimTrace",
    "SweepSpec",
    "TaskSpec",
    "UniformLatency",
    "UnsupportedMassError",
    "auth_loss",
    "auth_response_curve",
    "authenticity_budget_lb",
    "bandwidth_time",
    "budget_breakdown",
    "check_feasibility",
    "classify_design",
    "decode_time",
    "dominates",
    "effective_latency",
    "evaluate_grid",
    "kl_divergence",
    "min_cot_tokens",
    "min_feasible_budget",
    "min_retrievals_for",
    "minimal_compliant_design",
    "n_star",
    "parse_scenario",
    "pareto_front",
    "prefill_time",
    "reasoning_budget_lb",
    "scenario_from_dict",
    "scenario_to_dict",
    "serialize_scenario",
    "simulate",
    "trace_summary",
    "validate_trace",
]
