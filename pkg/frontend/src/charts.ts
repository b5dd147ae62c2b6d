/**
 * Pure chart geometry: maps payload values into SVG coordinates.
 *
 * Kept free of DOM access so the mapping is unit-testable; render.ts turns
 * the computed geometry into elements.  Only scales and positions are
 * computed here, never model quantities.
 */

import type { LatencyCurvePoint, SweepPointPayload } from './types.js';

export interface PlotArea {
  width: number;
  height: number;
  margin: number;
}

export interface LinearScale {
  min: number;
  max: number;
  toPixel(value: number): number;
}

export function linearScale(
  min: number,
  max: number,
  pixelLo: number,
  pixelHi: number,
): LinearScale {
  const span = max - min || 1;
  return {
    min,
    max,
    toPixel: (value: number) =>
      pixelLo + ((value - min) / span) * (pixelHi - pixelLo),
  };
}

export interface CurveGeometry {
  effectivePath: string;
  computePath: string;
  bandwidthPath: string;
  budgetY: number;
  nStarX: number | null;
  x: LinearScale;
  y: LinearScale;
}

export function curveGeometry(
  points: LatencyCurvePoint[],
  nStar: number,
  budget: number,
  area: PlotArea,
): CurveGeometry {
  const { width, height, margin } = area;
  const ns = points.map((p) => p.n);
  const values = points
    .flatMap((p) => [p.effective_s, p.compute_s, p.bandwidth_s])
    .concat([budget]);
  const x = linearScale(Math.min(...ns), Math.max(...ns), margin, width - margin);
  const y = linearScale(0, Math.max(...values), height - margin, margin);

  const path = (pick: (p: LatencyCurvePoint) => number): string =>
    points
      .map(
        (p, i) =>
          `${i === 0 ? 'M' : 'L'}${x.toPixel(p.n).toFixed(2)},${y
            .toPixel(pick(p))
            .toFixed(2)}`,
      )
      .join(' ');

  const inDomain = nStar >= x.min && nStar <= x.max;
  return {
    effectivePath: path((p) => p.effective_s),
    computePath: path((p) => p.compute_s),
    bandwidthPath: path((p) => p.bandwidth_s),
    budgetY: y.toPixel(budget),
    nStarX: inDomain ? x.toPixel(nStar) : null,
    x,
    y,
  };
}

export interface ScatterMarker {
  x: number;
  y: number;
  onFrontier: boolean;
  colorBucket: number;
  cotTokens: number;
  retrievalCalls: number;
  latency: number;
  authLoss: number;
  deficit: number;
}

export const DEFICIT_BUCKETS = 5;

export interface ScatterGeometry {
  markers: ScatterMarker[];
  x: LinearScale;
  y: LinearScale;
  maxDeficit: number;
}

export function scatterGeometry(
  points: SweepPointPayload[],
  area: PlotArea,
): ScatterGeometry {
  const { width, height, margin } = area;
  const latencies = points.map((p) => p.latency_s);
  const losses = points.map((p) => p.auth_loss_nats);
  const maxDeficit = Math.max(...points.map((p) => p.reasoning_deficit_tokens), 0);
  const x = linearScale(
    Math.min(...latencies),
    Math.max(...latencies),
    margin,
    width - margin,
  );
  const y = linearScale(
    Math.min(...losses),
    Math.max(...losses),
    height - margin,
    margin,
  );
  const bucket = (deficit: number): number =>
    maxDeficit === 0
      ? 0
      : Math.min(
          DEFICIT_BUCKETS - 1,
          Math.floor((deficit / maxDeficit) * DEFICIT_BUCKETS),
        );
  return {
    markers: points.map((p) => ({
      x: x.toPixel(p.latency_s),
      y: y.toPixel(p.auth_loss_nats),
      onFrontier: p.on_frontier,
      colorBucket: bucket(p.reasoning_deficit_tokens),
      cotTokens: p.cot_tokens,
      retrievalCalls: p.retrieval_calls,
      latency: p.latency_s,
      authLoss: p.auth_loss_nats,
      deficit: p.reasoning_deficit_tokens,
    })),
    x,
    y,
    maxDeficit,
  };
}
