"""Unit and property tests for the closed-form cost model."""

from __future__ import annotations

import pytest
from hypothesis import given
import hypothesis.strategies as st

from bar_explorer import (
    CostMode,
    DesignPoint,
    HardwareProfile,
    TaskSpec,
    bandwidth_time,
    budget_breakdown,
    decode_time,
    effective_latency,
    prefill_time,
)
from conftest import design_points, finite_floats, hardware_profiles, task_specs

HW = HardwareProfile(
    tau_decode=0.05,
    a_prefill=1e-6,
    rho_retrieval=0.04,
    mu_decode=2_000_000,
    beta_retrieval=1_000_000,
    b_max=1_000_000_000,
)

BANDWIDTH_HW = HardwareProfile(
    tau_decode=1e-4,
    a_prefill=1e-6,
    rho_retrieval=0.04,
    mu_decode=10_000_000,
    beta_retrieval=1_000_000,
    b_max=100_000_000,
)

TASK = TaskSpec(n=100, budget_T=10.0, k_required=2, c1=1.0)


class TestPrefill:
    def test_empty_prompt(self):
        assert prefill_time(0, HW) == 0.0

    def test_quadratic_values(self):
        assert prefill_time(100, HW) == pytest.approx(0.01, rel=1e-12)
        assert prefill_time(1000, HW) == pytest.approx(1.0, rel=1e-12)

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            prefill_time(-1, HW)


class TestDecode:
    def test_zero(self):
        assert decode_time(0, HW) == 0.0

    def test_linear_values(self):
        assert decode_time(200, HW) == pytest.approx(10.0, rel=1e-12)
        assert decode_time(199, HW) == pytest.approx(9.95, rel=1e-12)


class TestBudgetBreakdown:
    def test_extended_example(self):
        task = TaskSpec(n=0, budget_T=10.0, k_required=2, c1=1.0)
        design = DesignPoint(cot_tokens=200, retrieval_calls=2, tool_latencies=(0.1,))
        b = budget_breakdown(design, task, HW, CostMode.EXTENDED)
        assert b.model_time == pytest.approx(10.0, rel=1e-12)
        assert b.retrieval_time == pytest.approx(0.08, rel=1e-12)
        assert b.tool_time == pytest.approx(0.1, rel=1e-12)
        assert b.prefill_time == 0.0
        assert b.compute_total == pytest.approx(10.18, rel=1e-12)

    def test_theorem_exact_excludes_tools_and_prefill(self):
        task = TaskSpec(n=0, budget_T=10.0, k_required=2, c1=1.0)
        design = DesignPoint(cot_tokens=200, retrieval_calls=2, tool_latencies=(0.1,))
        b = budget_breakdown(design, task, HW, CostMode.THEOREM_EXACT)
        assert b.compute_total == pytest.approx(10.08, rel=1e-12)
        assert b.tool_time == pytest.approx(0.1, rel=1e-12)

    def test_zero_design(self):
        task = TaskSpec(n=0, budget_T=1.0, k_required=0, c1=1.0)
        b = budget_breakdown(DesignPoint(0, 0), task, HW, CostMode.EXTENDED)
        assert (
            b.model_time,
            b.retrieval_time,
            b.tool_time,
            b.prefill_time,
            b.compute_total,
            b.bandwidth_total,
            b.effective,
        ) == (0, 0, 0, 0, 0, 0, 0)


class TestBandwidth:
    def test_zero(self):
        assert bandwidth_time(DesignPoint(0, 0), HW) == 0.0

    def test_values(self):
        assert bandwidth_time(DesignPoint(100, 2), HW) == pytest.approx(
            0.202, rel=1e-12
        )
        assert bandwidth_time(DesignPoint(100, 2), BANDWIDTH_HW) == pytest.approx(
            10.02, rel=1e-12
        )


class TestEffectiveLatency:
    def test_compute_dominant(self):
        got = effective_latency(DesignPoint(100, 2), TASK, HW, CostMode.THEOREM_EXACT)
        assert got == pytest.approx(5.08, rel=1e-12)

    def test_bandwidth_dominant(self):
        got = effective_latency(
            DesignPoint(100, 2), TASK, BANDWIDTH_HW, CostMode.THEOREM_EXACT
        )
        assert got == pytest.approx(10.02, rel=1e-12)

    def test_zero_design(self):
        task = TaskSpec(n=0, budget_T=1.0, k_required=0)
        assert effective_latency(DesignPoint(0, 0), task, HW) == 0.0


class TestValidation:
    def test_bad_hardware_field_named(self):
        with pytest.raises(ValueError, match="tau_decode"):
            HardwareProfile(
                tau_decode=-0.05,
                a_prefill=1e-6,
                rho_retrieval=0.04,
                mu_decode=1,
                beta_retrieval=1,
                b_max=1,
            )

    def test_bad_tool_latency(self):
        with pytest.raises(ValueError, match="tool_latencies"):
            DesignPoint(cot_tokens=0, retrieval_calls=0, tool_latencies=(-1.0,))

    def test_task_invariants(self):
        with pytest.raises(ValueError, match="budget_T"):
            TaskSpec(n=1, budget_T=0.0)
        with pytest.raises(ValueError, match="c1"):
            TaskSpec(n=1, budget_T=1.0, c1=0.0)


@given(task=task_specs(), design=design_points(), hw=hardware_profiles())
def test_effective_dominates_both_branches(task, design, hw):
    for mode in CostMode:
        b = budget_breakdown(design, task, hw, mode)
        assert b.effective >= b.compute_total
        assert b.effective >= b.bandwidth_total
        assert b.effective == max(b.compute_total, b.bandwidth_total)


@given(task=task_specs(), design=design_points(), hw=hardware_profiles())
def test_extended_at_least_theorem_exact(task, design, hw):
    exact = budget_breakdown(design, task, hw, CostMode.THEOREM_EXACT)
    extended = budget_breakdown(design, task, hw, CostMode.EXTENDED)
    assert extended.compute_total >= exact.compute_total


@given(
    task=task_specs(),
    design=design_points(),
    hw=hardware_profiles(),
    mode=st.sampled_from(list(CostMode)),
    extra_tokens=st.integers(min_value=1, max_value=1000),
    extra_calls=st.integers(min_value=1, max_value=50),
)
def test_monotone_in_design_knobs(task, design, hw, mode, extra_tokens, extra_calls):
    base = effective_latency(design, task, hw, mode)
    more_cot = DesignPoint(
        design.cot_tokens + extra_tokens,
        design.retrieval_calls,
        design.tool_latencies,
    )
    more_retrieval = DesignPoint(
        design.cot_tokens,
        design.retrieval_calls + extra_calls,
        design.tool_latencies,
    )
    more_tools = DesignPoint(
        design.cot_tokens,
        design.retrieval_calls,
        design.tool_latencies + (0.5,),
    )
    assert effective_latency(more_cot, task, hw, mode) >= base
    assert effective_latency(more_retrieval, task, hw, mode) >= base
    assert effective_latency(more_tools, task, hw, mode) >= base


@given(
    task=task_specs(),
    design=design_points(),
    hw=hardware_profiles(),
    mode=st.sampled_from(list(CostMode)),
    bump=finite_floats(1e-9, 10.0),
    byte_bump=st.integers(min_value=1, max_value=10**9),
)
def test_monotone_in_hardware_constants(task, design, hw, mode, bump, byte_bump):
    base = effective_latency(design, task, hw, mode)

    def vary(**kwargs) -> HardwareProfile:
        fields = dict(
            tau_decode=hw.tau_decode,
            a_prefill=hw.a_prefill,
            rho_retrieval=hw.rho_retrieval,
            mu_decode=hw.mu_decode,
            beta_retrieval=hw.beta_retrieval,
            b_max=hw.b_max,
        )
        fields.update(kwargs)
        return HardwareProfile(**fields)

    assert effective_latency(design, task, vary(tau_decode=hw.tau_decode + bump), mode) >= base
    assert effective_latency(design, task, vary(rho_retrieval=hw.rho_retrieval + bump), mode) >= base
    assert effective_latency(design, task, vary(mu_decode=hw.mu_decode + byte_bump), mode) >= base
    assert effective_latency(design, task, vary(beta_retrieval=hw.beta_retrieval + byte_bump), mode) >= base
    assert effective_latency(design, task, vary(b_max=hw.b_max + byte_bump), mode) <= base


@given(
    n=st.integers(min_value=0, max_value=1_000_000),
    cot=st.integers(min_value=0, max_value=1_000_000),
    hw=hardware_profiles(),
)
def test_scaling_laws_exact(n, cot, hw):
    # Doubling an integer count scales the float product by an exact power of
    # two, so these hold to the last bit, not just approximately.
    assert prefill_time(2 * n, hw) == 4.0 * prefill_time(n, hw)
    assert decode_time(2 * cot, hw) == 2.0 * decode_time(cot, hw)
