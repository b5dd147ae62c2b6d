"""Design-knob sweeps and Pareto frontier extraction.

A sweep evaluates every (C, R) cell of an integer grid against three
minimization objectives: effective latency in seconds, authenticity loss in
nats via the retrieval-response curve, and the reasoning deficit in tokens
(how far C falls short of the chain-of-thought requirement).  The frontier
is the non-dominated subset under weak dominance: a point is dominated if
another point is <= in every objective and strictly < in at least one, so
identical objective vectors are all retained.

Grid evaluation is embarrassingly parallel; this implementation runs
sequentially, and any parallel replacement must preserve the row-major
output order and values exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .authenticity import AuthCurve, auth_response_curve
from .bounds import min_cot_tokens
from .core import (
    CostMode,
    DesignPoint,
    HardwareProfile,
    TaskSpec,
    effective_latency,
)


@dataclass(frozen=True)
class GridRange:
    """Inclusive integer range with stride: start, start+step, ..., <= stop."""

    start: int
    stop: int
    step: int = 1

    def __post_init__(self) -> None:
        if self.start < 0:
            raise ValueError("range start must be >= 0")
        if self.stop < self.start:
            raise ValueError("range stop must be >= start")
        if self.step < 1:
            raise ValueError("range step must be >= 1")

    def values(self) -> range:
        return range(self.start, self.stop + 1, self.step)

    def __len__(self) -> int:
        return len(self.values())


@dataclass(frozen=True)
class SweepSpec:
    cot_range: GridRange
    retrieval_range: GridRange
    curve: AuthCurve = AuthCurve()
    mode: CostMode = CostMode.THEOREM_EXACT

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", CostMode(self.mode))

    @property
    def cells(self) -> int:
        return len(self.cot_range) * len(self.retrieval_range)


@dataclass(frozen=True)
class EvaluatedPoint:
    design: DesignPoint
    latency: float
    auth_loss: float
    reasoning_deficit: int

    @property
    def objectives(self) -> tuple[float, float, int]:
        return (self.latency, self.auth_loss, self.reasoning_deficit)


def evaluate_grid(
    sweep: SweepSpec, task: TaskSpec, hw: HardwareProfile
) -> list[EvaluatedPoint]:
    """Evaluate one point per (C, R) grid cell, row-major with C outer."""
    required = min_cot_tokens(task.n, task.c1)
    points = []
    for cot in sweep.cot_range.values():
        for retrievals in sweep.retrieval_range.values():
            design = DesignPoint(cot_tokens=cot, retrieval_calls=retrievals)
            points.append(
                EvaluatedPoint(
                    design=design,
                    latency=effective_latency(design, task, hw, sweep.mode),
                    auth_loss=auth_response_curve(retrievals, sweep.curve),
                    reasoning_deficit=max(0, required - cot),
                )
            )
    return points


def dominates(a: tuple[float, ...], b: tuple[float, ...]) -> bool:
    """Weak Pareto dominance for minimization: a <= b everywhere, < somewhere."""
    return all(x <= y for x, y in zip(a, b)) and any(
        x < y for x, y in zip(a, b)
    )


def pareto_front(points: list[EvaluatedPoint]) -> list[EvaluatedPoint]:
    """Non-dominated subset of `points`, preserved in input order.

    Points are scanned in lexicographic objective order, under which a point
    can only ever be dominated by one that sorts no later, so each candidate
    needs comparing against the frontier found so far rather than the whole
    set.
    """
    if not points:
        raise ValueError("pareto_front requires at least one point")
    order = sorted(range(len(points)), key=lambda i: points[i].objectives)
    frontier_objectives: list[tuple[float, float, int]] = []
    on_front = [False] * len(points)
    for i in order:
        objectives = points[i].objectives
        if not any(dominates(kept, objectives) for kept in frontier_objectives):
            on_front[i] = True
            frontier_objectives.append(objectives)
    return [p for i, p in enumerate(points) if on_front[i]]
