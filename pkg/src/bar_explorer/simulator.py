"""Discrete-event simulation of a serial inference pipeline.

One request is simulated as a strictly serial event chain: a single prefill
event, then decode and retrieval events interleaved round-robin, then tool
calls.  Every event carries a duration and a byte count, so the trace both
times the request and accounts for its memory traffic.

Per-event roofline: each decode token takes max(tau, mu/b_max) seconds and
each retrieval takes max(rho, beta/b_max).  Because the per-event max
dominates the pipeline-level max of the summed branches, a simulated total
can never fall below the analytic effective latency; the simulator is a
conservative refinement of the closed-form model, which is what makes it
usable as an empirical check of the lower bounds.

Stochastic retrieval jitter is drawn from a PCG64 generator seeded from the
config, and the algorithm identifier is recorded on the trace so runs are
reproducible elsewhere.  Identical (inputs, seed) always yields an identical
trace.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np

from .bounds import (
    authenticity_budget_lb,
    min_cot_tokens,
    reasoning_budget_lb,
)
from .core import (
    CostMode,
    DesignPoint,
    HardwareProfile,
    TaskSpec,
    effective_latency,
    prefill_time,
)

RNG_ALGORITHM = "pcg64"


class SimMode(str, Enum):
    DETERMINISTIC = "deterministic"
    STOCHASTIC = "stochastic"


@dataclass(frozen=True)
class ConstantLatency:
    """Every retrieval call takes exactly `value` seconds."""

    value: float

    def __post_init__(self) -> None:
        if self.value <= 0:
            raise ValueError("constant latency value must be > 0")

    @property
    def infimum(self) -> float:
        return self.value

    def sample(self, rng: np.random.Generator) -> float:
        return self.value


@dataclass(frozen=True)
class UniformLatency:
    """Retrieval latency uniform on [low, high] seconds."""

    low: float
    high: float

    def __post_init__(self) -> None:
        if self.low <= 0:
            raise ValueError("uniform low must be > 0")
        if self.high < self.low:
            raise ValueError("uniform low must be <= high")

    @property
    def infimum(self) -> float:
        return self.low

    def sample(self, rng: np.random.Generator) -> float:
        return float(rng.uniform(self.low, self.high))


@dataclass(frozen=True)
class LogNormalLatency:
    """Retrieval latency lognormal(location, scale) seconds."""

    location: float
    scale: float

    def __post_init__(self) -> None:
        if self.location <= 0:
            raise ValueError("lognormal location must be > 0")
        if self.scale <= 0:
            raise ValueError("lognormal scale must be > 0")

    @property
    def infimum(self) -> float:
        return 0.0

    def sample(self, rng: np.random.Generator) -> float:
        return float(rng.lognormal(mean=self.location, sigma=self.scale))


RetrievalLatencyDist = Union[ConstantLatency, UniformLatency, LogNormalLatency]


@dataclass(frozen=True)
class SimConfig:
    """How one simulation run is driven.

    In deterministic mode the retrieval distribution must be constant (it
    defaults to the hardware profile's rho when left unset); stochastic mode
    samples it with the seeded generator.
    """

    mode: SimMode = SimMode.DETERMINISTIC
    retrieval_latency_dist: RetrievalLatencyDist | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "mode", SimMode(self.mode))
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if (
            self.mode is SimMode.DETERMINISTIC
            and self.retrieval_latency_dist is not None
            and not isinstance(self.retrieval_latency_dist, ConstantLatency)
        ):
            raise ValueError(
                "deterministic mode requires a constant retrieval latency"
            )


class EventKind(str, Enum):
    PREFILL = "prefill"
    DECODE_TOKEN = "decode_token"
    RETRIEVAL = "retrieval"
    TOOL = "tool"


@dataclass(frozen=True)
class SimEvent:
    kind: EventKind
    start: float
    duration: float
    bytes: int


@dataclass(frozen=True)
class SimTrace:
    """Contiguous event sequence plus its time and byte totals.

    The header fields (rng_algorithm, seed) document how stochastic
    durations were drawn so the trace can be regenerated bit-for-bit.
    """

    events: tuple[SimEvent, ...]
    total_latency: float
    total_bytes: int
    rng_algorithm: str = RNG_ALGORITHM
    seed: int = 0


@dataclass(frozen=True)
class TraceValidation:
    """Lower-bound checks of a trace against the analytic model."""

    total_above_effective: bool
    decode_above_reasoning_lb: bool
    retrieval_above_auth_lb: bool
    trace_total: float
    analytic_effective: float
    decode_seconds: float
    reasoning_lb: float
    retrieval_seconds: float
    auth_lb: float

    @property
    def all_ok(self) -> bool:
        return (
            self.total_above_effective
            and self.decode_above_reasoning_lb
            and self.retrieval_above_auth_lb
        )


def simulate(
    task: TaskSpec,
    design: DesignPoint,
    hw: HardwareProfile,
    config: SimConfig = SimConfig(),
) -> SimTrace:
    """Run the serial pipeline and return its canonical trace.

    Event order is fixed (prefill, decode/retrieval round-robin, tools) so
    traces are canonical; totals are order-invariant in a serial pipeline.
    Retrieval latencies are drawn up front in call order, so the interleaving
    cannot perturb the sampled values.
    """
    dist = config.retrieval_latency_dist
    if dist is None:
        dist = ConstantLatency(hw.rho_retrieval)

    if SimMode(config.mode) is SimMode.DETERMINISTIC:
        retrieval_raw = [dist.value] * design.retrieval_calls
    else:
        rng = np.random.Generator(np.random.PCG64(config.seed))
        retrieval_raw = [dist.sample(rng) for _ in range(design.retrieval_calls)]

    decode_duration = max(hw.tau_decode, hw.mu_decode / hw.b_max)
    retrieval_floor = hw.beta_retrieval / hw.b_max

    events: list[SimEvent] = []
    clock = 0.0
    total_bytes = 0

    def emit(kind: EventKind, duration: float, nbytes: int) -> None:
        nonlocal clock, total_bytes
        events.append(
            SimEvent(kind=kind, start=clock, duration=duration, bytes=nbytes)
        )
        clock += duration
        total_bytes += nbytes

    emit(EventKind.PREFILL, prefill_time(task.n, hw), 0)
    for i in range(max(design.cot_tokens, design.retrieval_calls)):
        if i < design.cot_tokens:
            emit(EventKind.DECODE_TOKEN, decode_duration, hw.mu_decode)
        if i < design.retrieval_calls:
            emit(
                EventKind.RETRIEVAL,
                max(retrieval_raw[i], retrieval_floor),
                hw.beta_retrieval,
            )
    for latency in design.tool_latencies:
        emit(EventKind.TOOL, latency, 0)

    # fsum gives the correctly rounded duration total; naive accumulation can
    # drift an ulp below the analytic products it must dominate.
    return SimTrace(
        events=tuple(events),
        total_latency=math.fsum(e.duration for e in events),
        total_bytes=total_bytes,
        rng_algorithm=RNG_ALGORITHM,
        seed=config.seed,
    )


@dataclass(frozen=True)
class KindSummary:
    seconds: float
    bytes: int
    share: float


def trace_summary(trace: SimTrace) -> dict[str, KindSummary]:
    """Per-kind seconds, bytes, and share of wall time.

    Shares sum to 1.  For the degenerate all-zero-duration trace, shares
    fall back to event counts so the single-event case still reports 1.0.
    """
    if not trace.events:
        raise ValueError("trace_summary requires a non-empty trace")
    durations: dict[str, list[float]] = {}
    nbytes: dict[str, int] = {}
    for event in trace.events:
        kind = EventKind(event.kind).value
        durations.setdefault(kind, []).append(event.duration)
        nbytes[kind] = nbytes.get(kind, 0) + event.bytes
    total = trace.total_latency
    summary = {}
    for kind, values in durations.items():
        seconds = math.fsum(values)
        if total > 0:
            share = seconds / total
        else:
            share = len(values) / len(trace.events)
        summary[kind] = KindSummary(seconds=seconds, bytes=nbytes[kind], share=share)
    return summary


def _at_least(value: float, bound: float) -> bool:
    # The analytic bounds multiply where the trace sums; the two rounding
    # chains can disagree by a few ulps even though the real-arithmetic
    # inequality always holds, so allow exactly that much slack.
    return value >= bound - 8.0 * math.ulp(bound)


def validate_trace(
    trace: SimTrace,
    task: TaskSpec,
    design: DesignPoint,
    hw: HardwareProfile,
) -> TraceValidation:
    """Check the trace against the analytic lower bounds.

    The reasoning bound is only asserted when the design actually meets the
    chain-of-thought requirement, and the retrieval bound when it meets the
    retrieval requirement; outside those regimes the corresponding check
    passes vacuously.  Comparisons tolerate a few ulps of float rounding.
    """
    counts = {kind: 0 for kind in EventKind}
    for event in trace.events:
        counts[EventKind(event.kind)] += 1
    expected = {
        EventKind.PREFILL: 1,
        EventKind.DECODE_TOKEN: design.cot_tokens,
        EventKind.RETRIEVAL: design.retrieval_calls,
        EventKind.TOOL: len(design.tool_latencies),
    }
    if counts != expected:
        raise ValueError(
            f"trace event counts {counts} do not match design {expected}"
        )

    decode_seconds = math.fsum(
        e.duration for e in trace.events if EventKind(e.kind) is EventKind.DECODE_TOKEN
    )
    retrieval_seconds = math.fsum(
        e.duration for e in trace.events if EventKind(e.kind) is EventKind.RETRIEVAL
    )

    analytic = effective_latency(design, task, hw, CostMode.THEOREM_EXACT)
    reasoning_lb = reasoning_budget_lb(task.n, task.c1, hw.tau_decode)
    auth_lb = authenticity_budget_lb(task.k_required, hw.rho_retrieval)

    meets_reasoning = design.cot_tokens >= min_cot_tokens(task.n, task.c1)
    meets_auth = design.retrieval_calls >= task.k_required

    return TraceValidation(
        total_above_effective=_at_least(trace.total_latency, analytic),
        decode_above_reasoning_lb=(
            _at_least(decode_seconds, reasoning_lb) if meets_reasoning else True
        ),
        retrieval_above_auth_lb=(
            _at_least(retrieval_seconds, auth_lb) if meets_auth else True
        ),
        trace_total=trace.total_latency,
        analytic_effective=analytic,
        decode_seconds=decode_seconds,
        reasoning_lb=reasoning_lb,
        retrieval_seconds=retrieval_seconds,
        auth_lb=auth_lb,
    )
