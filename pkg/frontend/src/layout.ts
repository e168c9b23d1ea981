/**
 * Shared plot geometry: canvas size, margins, axis scales, tick
 * placement.  Both the SVG and the PNG backends draw the same layout
 * from these numbers, so the two formats stay visually interchangeable.
 */

import type { Curve } from "./figures.js";

export const WIDTH = 960;
export const HEIGHT = 640;
export const MARGIN = { left: 76, right: 180, top: 56, bottom: 64 };

export interface Scale {
  lo: number;
  hi: number;
  pxLo: number;
  pxHi: number;
}

export function mapTo(scale: Scale, value: number): number {
  const t = (value - scale.lo) / (scale.hi - scale.lo);
  return scale.pxLo + t * (scale.pxHi - scale.pxLo);
}

function extent(values: number[][]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const series of values) {
    for (const v of series) {
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
  }
  if (lo === hi) {
    const pad = Math.max(1.0, Math.abs(lo)) * 0.5;
    return [lo - pad, hi + pad];
  }
  const pad = 0.04 * (hi - lo);
  return [lo - pad, hi + pad];
}

export function makeScales(curves: Curve[]): { x: Scale; y: Scale } {
  const [xLo, xHi] = extent(curves.map((c) => c.x));
  const [yLo, yHi] = extent(curves.map((c) => c.y));
  return {
    x: { lo: xLo, hi: xHi, pxLo: MARGIN.left, pxHi: WIDTH - MARGIN.right },
    // Pixel y grows downward; energy grows upward.
    y: { lo: yLo, hi: yHi, pxLo: HEIGHT - MARGIN.bottom, pxHi: MARGIN.top },
  };
}

export function niceTicks(lo: number, hi: number, target = 6): number[] {
  const span = hi - lo;
  const raw = span / target;
  const base = Math.pow(10, Math.floor(Math.log10(raw)));
  let step = 10 * base;
  for (const mult of [1, 2, 5]) {
    if (mult * base >= raw) {
      step = mult * base;
      break;
    }
  }
  const ticks: number[] = [];
  const first = Math.ceil(lo / step) * step;
  for (let v = first; v <= hi + 1e-9 * step; v += step) {
    ticks.push(Math.abs(v) < 1e-12 * step ? 0 : v);
  }
  return ticks;
}

export function formatTick(value: number): string {
  if (value === 0) return "0";
  const magnitude = Math.abs(value);
  if (magnitude >= 1e5 || magnitude < 1e-4) {
    return value.toExponential(0).replace("e+", "e");
  }
  // Up to 10 significant digits, trailing zeros trimmed.
  return String(Number(value.toPrecision(10)));
}

/** Split a polyline into on-segments of a dash pattern by arc length. */
export function dashSegments(
  xs: number[],
  ys: number[],
  on: number,
  off: number
): Array<[number, number, number, number]> {
  const out: Array<[number, number, number, number]> = [];
  const period = on + off;
  let travelled = 0;
  for (let i = 0; i + 1 < xs.length; i++) {
    let x0 = xs[i];
    let y0 = ys[i];
    const x1 = xs[i + 1];
    const y1 = ys[i + 1];
    let remaining = Math.hypot(x1 - x0, y1 - y0);
    while (remaining > 1e-12) {
      const phase = travelled % period;
      const inOn = phase < on;
      const slice = Math.min(remaining, (inOn ? on : period) - phase);
      const t = slice / remaining;
      const xm = x0 + (x1 - x0) * t;
      const ym = y0 + (y1 - y0) * t;
      if (inOn) out.push([x0, y0, xm, ym]);
      x0 = xm;
      y0 = ym;
      travelled += slice;
      remaining -= slice;
    }
  }
  return out;
}
