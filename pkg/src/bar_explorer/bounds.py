"""Feasibility thresholds and the three-way budget/authenticity/reasoning check.

The reasoning constraint is the binary threshold C >= ceil(c1 * n), the
authenticity constraint is R >= k_required, and the budget constraint is
effective latency <= T.  For the minimal compliant design (C = ceil(c1*n),
R = k, no tools) the compute branch is c1*tau*n + k*rho up to token
rounding, which crosses the budget at

    n_star = ceil((T - k*rho) / (c1 * tau))

Past that threshold the three constraints cannot all hold.  Budget
satisfaction is <= T; infeasibility is only asserted on the strict region
n > (T - k*rho)/(c1*tau), which sidesteps the boundary case where the
ratio is an exact integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    CostMode,
    DesignPoint,
    HardwareProfile,
    TaskSpec,
    effective_latency,
)

# Label for each subset of satisfied constraints, keyed by
# (budget_ok, auth_ok, reasoning_ok).
_LABELS = {
    (False, False, False): "NONE",
    (True, False, False): "B",
    (False, True, False): "A",
    (False, False, True): "R",
    (True, True, False): "BA",
    (True, False, True): "BR",
    (False, True, True): "AR",
    (True, True, True): "ALL",
}


@dataclass(frozen=True)
class FeasibilityReport:
    """Verdict of the three constraints for one (task, design) pair."""

    reasoning_ok: bool
    auth_ok: bool
    budget_ok: bool
    n_star: int
    theorem_binding: bool
    effective: float
    label: str

    @property
    def feasible(self) -> bool:
        return self.reasoning_ok and self.auth_ok and self.budget_ok


def min_cot_tokens(n: int, c1: float) -> int:
    """Smallest chain-of-thought token count that satisfies the linear
    reasoning requirement: ceil(c1 * n)."""
    _check(n >= 0, "n must be >= 0")
    _check(c1 > 0, "c1 must be > 0")
    return math.ceil(c1 * n)


def reasoning_budget_lb(n: int, c1: float, tau: float) -> float:
    """Lower bound c1 * tau * n on decode seconds for inputs of length n."""
    _check(n >= 0, "n must be >= 0")
    return c1 * tau * n


def authenticity_budget_lb(k: int, rho: float) -> float:
    """Lower bound k * rho on retrieval seconds when k calls are required."""
    _check(k >= 0, "k must be >= 0")
    _check(rho > 0, "rho must be > 0")
    return k * rho


def n_star(task: TaskSpec, hw: HardwareProfile) -> int:
    """Critical input length beyond which the three constraints conflict.

    Clamped to 0 when T <= k*rho: the budget is exhausted by retrieval
    alone, so no input length n >= 1 is feasible.
    """
    remaining = task.budget_T - task.k_required * hw.rho_retrieval
    if remaining <= 0:
        return 0
    return max(0, math.ceil(remaining / (task.c1 * hw.tau_decode)))


def theorem_binding(task: TaskSpec, hw: HardwareProfile) -> bool:
    """True when task.n lies strictly past the budget crossover."""
    remaining = task.budget_T - task.k_required * hw.rho_retrieval
    return task.n > remaining / (task.c1 * hw.tau_decode)


def minimal_compliant_design(task: TaskSpec) -> DesignPoint:
    """Cheapest design that satisfies reasoning and authenticity thresholds."""
    return DesignPoint(
        cot_tokens=min_cot_tokens(task.n, task.c1),
        retrieval_calls=task.k_required,
        tool_latencies=(),
    )


def check_feasibility(
    task: TaskSpec,
    design: DesignPoint,
    hw: HardwareProfile,
    mode: CostMode = CostMode.THEOREM_EXACT,
) -> FeasibilityReport:
    """Evaluate all three constraints and classify the design."""
    reasoning_ok = design.cot_tokens >= min_cot_tokens(task.n, task.c1)
    auth_ok = design.retrieval_calls >= task.k_required
    effective = effective_latency(design, task, hw, mode)
    budget_ok = effective <= task.budget_T
    label = _LABELS[(budget_ok, auth_ok, reasoning_ok)]
    return FeasibilityReport(
        reasoning_ok=reasoning_ok,
        auth_ok=auth_ok,
        budget_ok=budget_ok,
        n_star=n_star(task, hw),
        theorem_binding=theorem_binding(task, hw),
        effective=effective,
        label=label,
    )


def classify_design(report: FeasibilityReport) -> str:
    """Name the set of satisfied constraints (B=budget, A=authenticity,
    R=reasoning); two-letter labels are the BA/AR/BR deployment taxonomy."""
    return _LABELS[(report.budget_ok, report.auth_ok, report.reasoning_ok)]


def min_feasible_budget(task: TaskSpec, hw: HardwareProfile) -> float:
    """Smallest budget T at which the task is fully feasible: the
    theorem-exact effective latency of the minimal compliant design."""
    return effective_latency(
        minimal_compliant_design(task), task, hw, CostMode.THEOREM_EXACT
    )


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)
