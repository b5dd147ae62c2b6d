/**
 * Client-side parameter validation.
 *
 * Widgets enforce the same invariants the service enforces, so an invalid
 * value never leaves the browser: the offending field gets an inline error
 * and no request is issued.
 */

import type { ExplorerParams } from './state.js';

export interface FieldError {
  field: string;
  message: string;
}

function positive(errors: FieldError[], field: string, value: number): void {
  if (!Number.isFinite(value) || value <= 0) {
    errors.push({ field, message: 'must be > 0' });
  }
}

function nonNegative(errors: FieldError[], field: string, value: number): void {
  if (!Number.isFinite(value) || value < 0) {
    errors.push({ field, message: 'must be >= 0' });
  }
}

function positiveInteger(errors: FieldError[], field: string, value: number): void {
  if (!Number.isInteger(value) || value <= 0) {
    errors.push({ field, message: 'must be a positive integer' });
  }
}

function countInteger(errors: FieldError[], field: string, value: number): void {
  if (!Number.isInteger(value) || value < 0) {
    errors.push({ field, message: 'must be an integer >= 0' });
  }
}

export function validateParams(params: ExplorerParams): FieldError[] {
  const errors: FieldError[] = [];
  const { hardware, task, design, curve } = params;

  positive(errors, 'hardware.tau_decode', hardware.tau_decode);
  nonNegative(errors, 'hardware.a_prefill', hardware.a_prefill);
  positive(errors, 'hardware.rho_retrieval', hardware.rho_retrieval);
  positiveInteger(errors, 'hardware.mu_decode', hardware.mu_decode);
  positiveInteger(errors, 'hardware.beta_retrieval', hardware.beta_retrieval);
  positiveInteger(errors, 'hardware.b_max', hardware.b_max);

  countInteger(errors, 'task.n', task.n);
  positive(errors, 'task.budget_T', task.budget_T);
  positive(errors, 'task.epsilon_r', task.epsilon_r);
  positive(errors, 'task.epsilon_h', task.epsilon_h);
  countInteger(errors, 'task.k_required', task.k_required);
  positive(errors, 'task.c1', task.c1);

  countInteger(errors, 'design.cot_tokens', design.cot_tokens);
  countInteger(errors, 'design.retrieval_calls', design.retrieval_calls);
  for (const [i, tool] of design.tool_latencies.entries()) {
    nonNegative(errors, `design.tool_latencies[${i}]`, tool);
  }

  nonNegative(errors, 'curve.eps_free', curve.eps_free);
  if (!Number.isFinite(curve.gamma) || curve.gamma <= 0 || curve.gamma >= 1) {
    errors.push({ field: 'curve.gamma', message: 'must be in (0, 1)' });
  }
  return errors;
}
