/**
 * DOM rendering for the what-if explorer.
 *
 * Builds the parameter panel, constraint badges, latency curve, pin list,
 * and frontier scatter from the store's view model.  All numbers shown come
 * straight from service payloads (formatted to 6 significant digits at the
 * last moment).
 */

import { curveGeometry, scatterGeometry, type PlotArea } from './charts.js';
import type { ExplorerStore, ExplorerView } from './state.js';
import type { CostMode, SweepParams } from './types.js';

const SVG_NS = 'http://www.w3.org/2000/svg';
const CURVE_AREA: PlotArea = { width: 560, height: 280, margin: 36 };
const SCATTER_AREA: PlotArea = { width: 560, height: 300, margin: 36 };
const DEFICIT_COLORS = ['#2b6cb0', '#4e8ac0', '#74a8cf', '#a3c4dd', '#d2e1ec'];

const PARAM_FIELDS: Array<{ path: string; label: string; step?: string }> = [
  { path: 'hardware.tau_decode', label: 'tau_decode (s/token)', step: '0.001' },
  { path: 'hardware.a_prefill', label: 'a_prefill (s/token^2)', step: '1e-7' },
  { path: 'hardware.rho_retrieval', label: 'rho_retrieval (s/call)', step: '0.005' },
  { path: 'hardware.mu_decode', label: 'mu_decode (bytes/token)' },
  { path: 'hardware.beta_retrieval', label: 'beta_retrieval (bytes/call)' },
  { path: 'hardware.b_max', label: 'b_max (bytes/s)' },
  { path: 'task.n', label: 'n (input tokens)' },
  { path: 'task.budget_T', label: 'budget T (s)', step: '0.1' },
  { path: 'task.epsilon_r', label: 'epsilon_r', step: '0.01' },
  { path: 'task.epsilon_h', label: 'epsilon_h (nats)', step: '0.01' },
  { path: 'task.k_required', label: 'k_required (calls)' },
  { path: 'task.c1', label: 'c1 (CoT tokens/input token)', step: '0.1' },
  { path: 'design.cot_tokens', label: 'C (CoT tokens)' },
  { path: 'design.retrieval_calls', label: 'R (retrieval calls)' },
  { path: 'curve.eps_free', label: 'curve eps_free (nats)', step: '0.05' },
  { path: 'curve.gamma', label: 'curve gamma', step: '0.05' },
];

function fmt(value: number): string {
  return Number(value.toPrecision(6)).toString();
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function svgEl(tag: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  return node;
}

export class ExplorerUI {
  private readonly inputs = new Map<string, HTMLInputElement>();
  private readonly errorSpans = new Map<string, HTMLElement>();
  private badgeRow!: HTMLElement;
  private labelBox!: HTMLElement;
  private banner!: HTMLElement;
  private breakdownBox!: HTMLElement;
  private curveBox!: HTMLElement;
  private pinList!: HTMLElement;
  private scatterBox!: HTMLElement;
  private generalError!: HTMLElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly store: ExplorerStore,
    private readonly sweep: SweepParams,
  ) {}

  build(): void {
    this.root.replaceChildren();
    const layout = el('div', 'layout');
    layout.append(this.buildControls(), this.buildResults());
    this.root.append(layout);
  }

  private buildControls(): HTMLElement {
    const panel = el('section', 'panel controls');
    panel.append(el('h2', undefined, 'Parameters'));

    const presetRow = el('div', 'preset-row');
    for (const name of ['paper-defaults', 'bandwidth-bound', 'rag-production']) {
      const button = el('button', 'preset', name);
      button.addEventListener('click', () => {
        void this.loadPreset(name);
      });
      presetRow.append(button);
    }
    panel.append(presetRow);

    const modeRow = el('div', 'mode-row');
    for (const mode of ['theorem-exact', 'extended'] as CostMode[]) {
      const button = el('button', 'mode', mode);
      button.dataset.mode = mode;
      button.addEventListener('click', () => {
        void this.store.setMode(mode);
      });
      modeRow.append(button);
    }
    panel.append(modeRow);

    const grid = el('div', 'param-grid');
    for (const { path, label, step } of PARAM_FIELDS) {
      const wrap = el('label', 'param');
      wrap.append(el('span', 'param-label', label));
      const input = document.createElement('input');
      input.type = 'number';
      if (step) input.step = step;
      input.addEventListener('change', () => {
        void this.store.setParam(path, Number(input.value));
      });
      this.inputs.set(path, input);
      const error = el('span', 'field-error');
      this.errorSpans.set(path, error);
      wrap.append(input, error);
      grid.append(wrap);
    }
    panel.append(grid);

    const actions = el('div', 'actions');
    const pinButton = el('button', 'action', 'Pin current design');
    pinButton.addEventListener('click', () => {
      void this.store.pinCurrentDesign();
    });
    const sweepButton = el('button', 'action', 'Run sweep');
    sweepButton.addEventListener('click', () => {
      void this.store.runSweep(this.sweep);
    });
    actions.append(pinButton, sweepButton);
    panel.append(actions);

    this.generalError = el('div', 'general-error');
    panel.append(this.generalError);
    return panel;
  }

  private buildResults(): HTMLElement {
    const panel = el('section', 'panel results');
    this.badgeRow = el('div', 'badges');
    this.labelBox = el('div', 'label-box');
    this.banner = el('div', 'banner hidden');
    this.breakdownBox = el('div', 'breakdown');
    this.curveBox = el('div', 'chart curve');
    this.pinList = el('div', 'pins');
    this.scatterBox = el('div', 'chart scatter');
    panel.append(
      el('h2', undefined, 'Feasibility'),
      this.badgeRow,
      this.labelBox,
      this.banner,
      this.breakdownBox,
      el('h2', undefined, 'Latency vs input length'),
      this.curveBox,
      el('h2', undefined, 'Pinned designs'),
      this.pinList,
      el('h2', undefined, 'Pareto frontier'),
      this.scatterBox,
    );
    return panel;
  }

  private async loadPreset(name: string): Promise<void> {
    const { PRESETS } = await import('./presets.js');
    const preset = PRESETS[name];
    this.store.params = structuredClone(preset);
    await this.store.refresh();
  }

  render(view: ExplorerView): void {
    this.syncInputs();
    this.renderErrors(view);
    this.renderBadges(view);
    this.renderBreakdown(view);
    this.renderCurve(view);
    this.renderPins(view);
    this.renderScatter(view);
    for (const button of this.root.querySelectorAll<HTMLButtonElement>('button.mode')) {
      button.classList.toggle('active', button.dataset.mode === this.store.params.mode);
    }
  }

  private syncInputs(): void {
    for (const [path, input] of this.inputs) {
      if (document.activeElement === input) continue;
      const [section, field] = path.split('.', 2);
      const value = (
        this.store.params as unknown as Record<string, Record<string, number>>
      )[section][field];
      input.value = String(value);
    }
  }

  private renderErrors(view: ExplorerView): void {
    for (const span of this.errorSpans.values()) {
      span.textContent = '';
    }
    const unplaced: string[] = [];
    for (const error of view.errors) {
      const span = this.errorSpans.get(error.field);
      if (span) {
        span.textContent = error.message;
      } else {
        unplaced.push(`${error.field}: ${error.message}`);
      }
    }
    this.generalError.textContent = unplaced.join('; ');
  }

  private renderBadges(view: ExplorerView): void {
    this.badgeRow.replaceChildren();
    if (!view.analyze) return;
    const { badges, regime } = view.analyze;
    const entries: Array<[string, boolean]> = [
      ['B', badges.budget_ok],
      ['A', badges.auth_ok],
      ['R', badges.reasoning_ok],
    ];
    for (const [letter, ok] of entries) {
      this.badgeRow.append(el('span', `badge ${ok ? 'ok' : 'violated'}`, letter));
    }
    this.labelBox.textContent =
      `label ${badges.label} | regime ${regime}-bound | ` +
      `n* ${view.analyze.n_star} | effective ${fmt(view.analyze.effective_s)} s`;
    this.banner.classList.toggle('hidden', !view.analyze.infeasible_for_all_n);
    this.banner.textContent = view.analyze.infeasible_for_all_n
      ? 'Budget below k*rho: infeasible for every input length n >= 1'
      : '';
  }

  private renderBreakdown(view: ExplorerView): void {
    this.breakdownBox.replaceChildren();
    if (!view.analyze) return;
    const b = view.analyze.breakdown;
    const rows: Array<[string, number]> = [
      ['model', b.model_time_s],
      ['retrieval', b.retrieval_time_s],
      ['tool', b.tool_time_s],
      ['prefill', b.prefill_time_s],
      ['compute total', b.compute_total_s],
      ['bandwidth total', b.bandwidth_total_s],
      ['effective', b.effective_s],
    ];
    const table = el('table', 'breakdown-table');
    for (const [name, value] of rows) {
      const tr = el('tr');
      tr.append(el('td', undefined, name), el('td', 'num', `${fmt(value)} s`));
      table.append(tr);
    }
    this.breakdownBox.append(table);
  }

  private renderCurve(view: ExplorerView): void {
    this.curveBox.replaceChildren();
    if (!view.analyze || view.analyze.latency_curve.length === 0) return;
    const geometry = curveGeometry(
      view.analyze.latency_curve,
      view.analyze.n_star,
      view.analyze.budget_T,
      CURVE_AREA,
    );
    const svg = svgEl('svg', {
      viewBox: `0 0 ${CURVE_AREA.width} ${CURVE_AREA.height}`,
      width: String(CURVE_AREA.width),
      height: String(CURVE_AREA.height),
    });
    svg.append(
      svgEl('path', { d: geometry.computePath, class: 'line compute' }),
      svgEl('path', { d: geometry.bandwidthPath, class: 'line bandwidth' }),
      svgEl('path', { d: geometry.effectivePath, class: 'line effective' }),
      svgEl('line', {
        x1: String(CURVE_AREA.margin),
        x2: String(CURVE_AREA.width - CURVE_AREA.margin),
        y1: geometry.budgetY.toFixed(2),
        y2: geometry.budgetY.toFixed(2),
        class: 'budget-line',
      }),
    );
    if (geometry.nStarX !== null) {
      svg.append(
        svgEl('line', {
          x1: geometry.nStarX.toFixed(2),
          x2: geometry.nStarX.toFixed(2),
          y1: String(CURVE_AREA.margin),
          y2: String(CURVE_AREA.height - CURVE_AREA.margin),
          class: 'nstar-line',
        }),
      );
      const marker = svgEl('text', {
        x: (geometry.nStarX + 4).toFixed(2),
        y: String(CURVE_AREA.margin + 12),
        class: 'nstar-label',
      });
      marker.textContent = `n* = ${view.analyze.n_star}`;
      svg.append(marker);
    }
    this.curveBox.append(svg);
  }

  private renderPins(view: ExplorerView): void {
    this.pinList.replaceChildren();
    if (view.pins.length === 0) {
      this.pinList.append(el('div', 'empty', 'no pinned designs'));
      return;
    }
    for (const pin of view.pins) {
      const row = el('div', 'pin-row');
      const latency = pin.latency_s === null ? '...' : `${fmt(pin.latency_s)} s`;
      row.append(
        el(
          'span',
          'pin-desc',
          `C=${pin.cot_tokens} R=${pin.retrieval_calls} -> ${latency}` +
            (pin.label ? ` (${pin.label})` : ''),
        ),
      );
      const remove = el('button', 'unpin', 'x');
      remove.addEventListener('click', () => this.store.unpin(pin.id));
      row.append(remove);
      this.pinList.append(row);
    }
  }

  private renderScatter(view: ExplorerView): void {
    this.scatterBox.replaceChildren();
    if (!view.frontier || view.frontier.length === 0) {
      this.scatterBox.append(
        el('div', 'empty', 'run a sweep to plot the (latency, auth loss) frontier'),
      );
      return;
    }
    const geometry = scatterGeometry(view.frontier, SCATTER_AREA);
    const svg = svgEl('svg', {
      viewBox: `0 0 ${SCATTER_AREA.width} ${SCATTER_AREA.height}`,
      width: String(SCATTER_AREA.width),
      height: String(SCATTER_AREA.height),
    });
    for (const marker of geometry.markers) {
      const dot = svgEl('circle', {
        cx: marker.x.toFixed(2),
        cy: marker.y.toFixed(2),
        r: marker.onFrontier ? '6' : '3.5',
        fill: DEFICIT_COLORS[marker.colorBucket],
        class: marker.onFrontier ? 'marker frontier' : 'marker',
      });
      const tip = document.createElementNS(SVG_NS, 'title');
      tip.textContent =
        `C=${marker.cotTokens} R=${marker.retrievalCalls}\n` +
        `latency ${fmt(marker.latency)} s, loss ${fmt(marker.authLoss)} nats, ` +
        `deficit ${marker.deficit}`;
      dot.append(tip);
      dot.addEventListener('click', () => {
        void this.store.adoptDesign(marker.cotTokens, marker.retrievalCalls);
      });
      svg.append(dot);
    }
    this.scatterBox.append(svg);
  }
}
