/**
 * Request and response shapes of the analysis service.
 *
 * These mirror the service JSON exactly; the UI never computes model
 * quantities itself, it only relays parameter edits and renders the numbers
 * that come back.
 */

export type CostMode = 'theorem-exact' | 'extended';

export interface HardwareParams {
  tau_decode: number;
  a_prefill: number;
  rho_retrieval: number;
  mu_decode: number;
  beta_retrieval: number;
  b_max: number;
}

export interface TaskParams {
  n: number;
  budget_T: number;
  epsilon_r: number;
  epsilon_h: number;
  k_required: number;
  c1: number;
}

export interface DesignParams {
  cot_tokens: number;
  retrieval_calls: number;
  tool_latencies: number[];
}

export interface CurveParams {
  eps_free: number;
  gamma: number;
}

export interface GridRangeParams {
  start: number;
  stop: number;
  step: number;
}

export interface SweepParams {
  cot_range: GridRangeParams;
  retrieval_range: GridRangeParams;
  mode: CostMode;
}

export interface AnalyzeRequest {
  hardware: HardwareParams;
  task: TaskParams;
  design?: DesignParams;
  mode?: CostMode;
  curve_n?: number[];
}

export interface SweepRequest {
  hardware: HardwareParams;
  task: TaskParams;
  sweep: SweepParams;
  curve?: CurveParams;
}

export interface BreakdownPayload {
  model_time_s: number;
  retrieval_time_s: number;
  tool_time_s: number;
  prefill_time_s: number;
  compute_total_s: number;
  bandwidth_total_s: number;
  effective_s: number;
  mode: string;
}

export interface FeasibilityPayload {
  reasoning_ok: boolean;
  auth_ok: boolean;
  budget_ok: boolean;
  feasible: boolean;
  theorem_binding: boolean;
  effective_s: number;
}

export interface LatencyCurvePoint {
  n: number;
  compute_s: number;
  bandwidth_s: number;
  effective_s: number;
}

export interface AnalyzeResponse {
  schema_version: number;
  report: 'analyze';
  name: string | null;
  mode: string;
  design: DesignParams;
  breakdown: BreakdownPayload;
  feasibility: FeasibilityPayload;
  n_star: number;
  label: string;
  min_feasible_budget_s: number;
  latency_curve: LatencyCurvePoint[];
}

export interface SweepPointPayload {
  cot_tokens: number;
  retrieval_calls: number;
  latency_s: number;
  auth_loss_nats: number;
  reasoning_deficit_tokens: number;
  on_frontier: boolean;
}

export interface SweepResponse {
  schema_version: number;
  report: 'sweep';
  name: string | null;
  mode: string;
  curve: CurveParams;
  points: SweepPointPayload[];
  frontier_size: number;
}

export interface ServiceErrorBody {
  error: { field: string; message: string };
}
