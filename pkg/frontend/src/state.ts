/**
 * Explorer state: current parameters, pinned designs, last responses.
 *
 * The store is the only owner of service payloads.  The view model it
 * derives copies payload numbers verbatim (formatting happens at render
 * time), so everything on screen is traceable to an intercepted response:
 * the UI does no model math of its own.
 */

import { AnalysisClient, ServiceError, StaleResponseError } from './api.js';
import type {
  AnalyzeResponse,
  CostMode,
  CurveParams,
  DesignParams,
  HardwareParams,
  LatencyCurvePoint,
  SweepParams,
  SweepPointPayload,
  SweepResponse,
  TaskParams,
} from './types.js';
import { validateParams, type FieldError } from './validate.js';

export interface ExplorerParams {
  hardware: HardwareParams;
  task: TaskParams;
  design: DesignParams;
  curve: CurveParams;
  mode: CostMode;
}

export interface PinnedDesign {
  id: number;
  design: DesignParams;
  response: AnalyzeResponse | null;
}

export interface ConstraintBadges {
  reasoning_ok: boolean;
  auth_ok: boolean;
  budget_ok: boolean;
  label: string;
}

export interface AnalyzeView {
  badges: ConstraintBadges;
  breakdown: AnalyzeResponse['breakdown'];
  effective_s: number;
  n_star: number;
  min_feasible_budget_s: number;
  regime: 'compute' | 'bandwidth';
  infeasible_for_all_n: boolean;
  theorem_binding: boolean;
  latency_curve: LatencyCurvePoint[];
  budget_T: number;
  design: DesignParams;
  mode: string;
}

export interface PinView {
  id: number;
  cot_tokens: number;
  retrieval_calls: number;
  latency_s: number | null;
  label: string | null;
}

export interface ExplorerView {
  errors: FieldError[];
  analyze: AnalyzeView | null;
  pins: PinView[];
  frontier: SweepPointPayload[] | null;
}

export class ExplorerStore {
  params: ExplorerParams;
  errors: FieldError[] = [];
  lastAnalyze: AnalyzeResponse | null = null;
  lastSweep: SweepResponse | null = null;
  pins: PinnedDesign[] = [];

  private nextPinId = 1;
  private readonly onChange: () => void;

  constructor(
    private readonly client: AnalysisClient,
    initial: ExplorerParams,
    onChange?: () => void,
  ) {
    this.params = structuredClone(initial);
    this.onChange = onChange ?? (() => undefined);
  }

  /** Apply one widget edit; issues an analyze request only when valid. */
  async setParam(path: string, value: number): Promise<void> {
    const [section, field] = path.split('.', 2);
    const target = (this.params as unknown as Record<string, Record<string, unknown>>)[
      section
    ];
    if (!target || !(field in target)) {
      throw new Error(`unknown parameter ${path}`);
    }
    target[field] = value;
    await this.refresh();
  }

  async setMode(mode: CostMode): Promise<void> {
    this.params.mode = mode;
    // one request for the live design plus one per pin, so pinned latencies
    // follow the mode without losing the pins themselves
    await Promise.all([this.refresh(), ...this.pins.map((p) => this.refreshPin(p))]);
  }

  async adoptDesign(cotTokens: number, retrievalCalls: number): Promise<void> {
    this.params.design = {
      cot_tokens: cotTokens,
      retrieval_calls: retrievalCalls,
      tool_latencies: [...this.params.design.tool_latencies],
    };
    await this.refresh();
  }

  async pinCurrentDesign(): Promise<void> {
    const pin: PinnedDesign = {
      id: this.nextPinId,
      design: structuredClone(this.params.design),
      response: null,
    };
    this.nextPinId += 1;
    this.pins.push(pin);
    await this.refreshPin(pin);
  }

  unpin(id: number): void {
    this.pins = this.pins.filter((p) => p.id !== id);
    this.onChange();
  }

  /** Re-validate and, if clean, fetch a fresh analyze response. */
  async refresh(): Promise<void> {
    this.errors = validateParams(this.params);
    this.onChange();
    if (this.errors.length > 0) {
      return;
    }
    try {
      this.lastAnalyze = await this.client.analyze({
        hardware: this.params.hardware,
        task: this.params.task,
        design: this.params.design,
        mode: this.params.mode,
      });
      this.onChange();
    } catch (err) {
      this.handleRequestError(err);
    }
  }

  async runSweep(sweep: SweepParams): Promise<void> {
    this.errors = validateParams(this.params);
    this.onChange();
    if (this.errors.length > 0) {
      return;
    }
    try {
      this.lastSweep = await this.client.sweep({
        hardware: this.params.hardware,
        task: this.params.task,
        sweep: { ...sweep, mode: this.params.mode },
        curve: this.params.curve,
      });
      this.onChange();
    } catch (err) {
      this.handleRequestError(err);
    }
  }

  private async refreshPin(pin: PinnedDesign): Promise<void> {
    try {
      pin.response = await this.client.analyze(
        {
          hardware: this.params.hardware,
          task: this.params.task,
          design: pin.design,
          mode: this.params.mode,
        },
        `pin-${pin.id}`,
      );
      this.onChange();
    } catch (err) {
      this.handleRequestError(err);
    }
  }

  private handleRequestError(err: unknown): void {
    if (err instanceof StaleResponseError) {
      return; // superseded: newer response already applied or in flight
    }
    if (err instanceof ServiceError) {
      this.errors = [...this.errors, { field: err.field, message: err.message }];
      this.onChange();
      return;
    }
    if (err instanceof Error && err.name === 'AbortError') {
      return;
    }
    throw err;
  }

  /** Everything the renderer needs; numbers are payload values, verbatim. */
  viewModel(): ExplorerView {
    const analyze = this.lastAnalyze;
    return {
      errors: [...this.errors],
      analyze: analyze
        ? {
            badges: {
              reasoning_ok: analyze.feasibility.reasoning_ok,
              auth_ok: analyze.feasibility.auth_ok,
              budget_ok: analyze.feasibility.budget_ok,
              label: analyze.label,
            },
            breakdown: analyze.breakdown,
            effective_s: analyze.breakdown.effective_s,
            n_star: analyze.n_star,
            min_feasible_budget_s: analyze.min_feasible_budget_s,
            regime:
              analyze.breakdown.compute_total_s >= analyze.breakdown.bandwidth_total_s
                ? 'compute'
                : 'bandwidth',
            infeasible_for_all_n: analyze.n_star === 0,
            theorem_binding: analyze.feasibility.theorem_binding,
            latency_curve: analyze.latency_curve,
            budget_T: this.params.task.budget_T,
            design: analyze.design,
            mode: analyze.mode,
          }
        : null,
      pins: this.pins.map((pin) => ({
        id: pin.id,
        cot_tokens: pin.design.cot_tokens,
        retrieval_calls: pin.design.retrieval_calls,
        latency_s: pin.response ? pin.response.breakdown.effective_s : null,
        label: pin.response ? pin.response.label : null,
      })),
      frontier: this.lastSweep ? this.lastSweep.points : null,
    };
  }
}
