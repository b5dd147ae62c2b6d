"""Shared hypothesis strategies for randomized model inputs."""

from __future__ import annotations

import hypothesis.strategies as st

from bar_explorer import DesignPoint, HardwareProfile, TaskSpec


def finite_floats(lo: float, hi: float) -> st.SearchStrategy[float]:
    return st.floats(
        min_value=lo, max_value=hi, allow_nan=False, allow_infinity=False
    )


def hardware_profiles() -> st.SearchStrategy[HardwareProfile]:
    return st.builds(
        HardwareProfile,
        tau_decode=finite_floats(1e-6, 1.0),
        a_prefill=finite_floats(0.0, 1e-5),
        rho_retrieval=finite_floats(1e-6, 1.0),
        mu_decode=st.integers(min_value=1, max_value=10**9),
        beta_retrieval=st.integers(min_value=1, max_value=10**9),
        b_max=st.integers(min_value=1, max_value=10**12),
    )


def task_specs() -> st.SearchStrategy[TaskSpec]:
    return st.builds(
        TaskSpec,
        n=st.integers(min_value=0, max_value=10_000),
        budget_T=finite_floats(1e-3, 1e3),
        epsilon_r=finite_floats(1e-6, 10.0),
        epsilon_h=finite_floats(1e-6, 10.0),
        k_required=st.integers(min_value=0, max_value=16),
        c1=finite_floats(0.05, 8.0),
    )


def design_points() -> st.SearchStrategy[DesignPoint]:
    return st.builds(
        DesignPoint,
        cot_tokens=st.integers(min_value=0, max_value=5_000),
        retrieval_calls=st.integers(min_value=0, max_value=64),
        tool_latencies=st.lists(
            finite_floats(0.0, 2.0), min_size=0, max_size=4
        ).map(tuple),
    )
