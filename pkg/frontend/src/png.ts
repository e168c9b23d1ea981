/**
 * PNG backend: draws the shared layout onto a raster canvas and
 * encodes it with pngjs (fixed zlib settings keep the bytes
 * deterministic).
 */

import pngjs from "pngjs";

import type { FigureData } from "./figures.js";
import {
  HEIGHT,
  MARGIN,
  WIDTH,
  dashSegments,
  formatTick,
  makeScales,
  mapTo,
  niceTicks,
} from "./layout.js";
import { Canvas, parseColor, textWidth, type Color } from "./raster.js";

const BLACK: Color = [0, 0, 0];
const GRID: Color = [221, 221, 221];
const SUBTLE: Color = [68, 68, 68];

export function renderPngCanvas(data: FigureData): Canvas {
  const { x, y } = makeScales(data.curves);
  const canvas = new Canvas(WIDTH, HEIGHT);
  const left = MARGIN.left;
  const right = WIDTH - MARGIN.right;
  const top = MARGIN.top;
  const bottom = HEIGHT - MARGIN.bottom;

  for (const tick of niceTicks(x.lo, x.hi)) {
    const tx = Math.round(mapTo(x, tick));
    canvas.line(tx, top, tx, bottom, GRID);
    const label = formatTick(tick);
    canvas.text(tx - textWidth(label) / 2, bottom + 10, label, BLACK);
  }
  for (const tick of niceTicks(y.lo, y.hi)) {
    const ty = Math.round(mapTo(y, tick));
    canvas.line(left, ty, right, ty, GRID);
    const label = formatTick(tick);
    canvas.text(left - 10 - textWidth(label), ty - 7, label, BLACK);
  }
  canvas.line(left, top, right, top, BLACK);
  canvas.line(left, bottom, right, bottom, BLACK);
  canvas.line(left, top, left, bottom, BLACK);
  canvas.line(right, top, right, bottom, BLACK);

  for (const curve of data.curves) {
    const color = parseColor(curve.color);
    const xs = curve.x.map((v) => mapTo(x, v));
    const ys = curve.y.map((v) => mapTo(y, v));
    if (curve.style === "dashed") {
      for (const [x0, y0, x1, y1] of dashSegments(xs, ys, 7, 5)) {
        canvas.line(x0, y0, x1, y1, color, 2);
      }
    } else {
      for (let i = 0; i + 1 < xs.length; i++) {
        canvas.line(xs[i], ys[i], xs[i + 1], ys[i + 1], color, 2);
      }
    }
  }

  canvas.text(left, 16, data.title, BLACK, 3);
  if (data.subtitle) {
    canvas.text(left, top - 18, data.subtitle, SUBTLE, 1);
  }
  canvas.text(
    (left + right) / 2 - textWidth(data.xLabel) / 2,
    HEIGHT - 24,
    data.xLabel,
    BLACK
  );
  canvas.textRotated(
    12,
    (top + bottom) / 2 + textWidth(data.yLabel) / 2,
    data.yLabel,
    BLACK
  );

  let legendY = top + 6;
  for (const curve of data.curves) {
    if (!curve.label) continue;
    const color = parseColor(curve.color);
    const lx = right + 14;
    if (curve.style === "dashed") {
      for (const [x0, y0, x1, y1] of dashSegments([lx, lx + 34], [legendY, legendY], 7, 5)) {
        canvas.line(x0, y0, x1, y1, color, 2);
      }
    } else {
      canvas.line(lx, legendY, lx + 34, legendY, color, 2);
    }
    canvas.text(lx + 42, legendY - 7, curve.label, BLACK);
    legendY += 24;
  }
  return canvas;
}

export function encodePng(canvas: Canvas): Buffer {
  const png = new pngjs.PNG({ width: canvas.width, height: canvas.height });
  for (let i = 0; i < canvas.width * canvas.height; i++) {
    png.data[4 * i] = canvas.data[3 * i];
    png.data[4 * i + 1] = canvas.data[3 * i + 1];
    png.data[4 * i + 2] = canvas.data[3 * i + 2];
    png.data[4 * i + 3] = 255;
  }
  return pngjs.PNG.sync.write(png, { deflateLevel: 9, deflateStrategy: 0 });
}

export function renderPng(data: FigureData): Buffer {
  return encodePng(renderPngCanvas(data));
}
