/**
 * Shipped presets mirroring the bundled scenario files, so the reference
 * configurations are reproducible in two clicks.
 */

import type { ExplorerParams } from './state.js';
import type { SweepParams } from './types.js';

export const DEFAULT_SWEEP: SweepParams = {
  cot_range: { start: 0, stop: 200, step: 50 },
  retrieval_range: { start: 0, stop: 3, step: 1 },
  mode: 'theorem-exact',
};

export const PRESETS: Record<string, ExplorerParams> = {
  'paper-defaults': {
    hardware: {
      tau_decode: 0.05,
      a_prefill: 1e-6,
      rho_retrieval: 0.04,
      mu_decode: 2_000_000,
      beta_retrieval: 1_000_000,
      b_max: 1_000_000_000,
    },
    task: {
      n: 100,
      budget_T: 10.0,
      epsilon_r: 0.1,
      epsilon_h: 0.1,
      k_required: 2,
      c1: 1.0,
    },
    design: { cot_tokens: 100, retrieval_calls: 2, tool_latencies: [] },
    curve: { eps_free: 0.8, gamma: 0.5 },
    mode: 'theorem-exact',
  },
  'bandwidth-bound': {
    hardware: {
      tau_decode: 1e-4,
      a_prefill: 1e-6,
      rho_retrieval: 0.04,
      mu_decode: 10_000_000,
      beta_retrieval: 1_000_000,
      b_max: 100_000_000,
    },
    task: {
      n: 100,
      budget_T: 10.0,
      epsilon_r: 0.1,
      epsilon_h: 0.1,
      k_required: 2,
      c1: 1.0,
    },
    design: { cot_tokens: 100, retrieval_calls: 2, tool_latencies: [] },
    curve: { eps_free: 0.8, gamma: 0.5 },
    mode: 'theorem-exact',
  },
  'rag-production': {
    hardware: {
      tau_decode: 0.05,
      a_prefill: 1e-6,
      rho_retrieval: 0.04,
      mu_decode: 2_000_000,
      beta_retrieval: 1_000_000,
      b_max: 1_000_000_000,
    },
    task: {
      n: 100,
      budget_T: 10.0,
      epsilon_r: 0.1,
      epsilon_h: 0.1,
      k_required: 87,
      c1: 1.0,
    },
    design: { cot_tokens: 100, retrieval_calls: 87, tool_latencies: [] },
    curve: { eps_free: 0.8, gamma: 0.5 },
    mode: 'theorem-exact',
  },
};
