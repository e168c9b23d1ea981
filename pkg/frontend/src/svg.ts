/**
 * SVG backend: emits a deterministic standalone document (no
 * timestamps, fixed coordinate rounding) drawing the shared layout.
 */

import type { FigureData } from "./figures.js";
import {
  HEIGHT,
  MARGIN,
  WIDTH,
  formatTick,
  makeScales,
  mapTo,
  niceTicks,
} from "./layout.js";

const FONT = "font-family=\"Helvetica, Arial, sans-serif\"";

function px(value: number): string {
  return (Math.round(value * 100) / 100).toString();
}

function escapeText(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderSvg(data: FigureData): string {
  const { x, y } = makeScales(data.curves);
  const left = MARGIN.left;
  const right = WIDTH - MARGIN.right;
  const top = MARGIN.top;
  const bottom = HEIGHT - MARGIN.bottom;
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}">`
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);

  for (const tick of niceTicks(x.lo, x.hi)) {
    const tx = px(mapTo(x, tick));
    parts.push(
      `<line x1="${tx}" y1="${top}" x2="${tx}" y2="${bottom}" stroke="#dddddd"/>`
    );
    parts.push(
      `<text x="${tx}" y="${bottom + 22}" text-anchor="middle" font-size="14" ${FONT}>` +
        `${formatTick(tick)}</text>`
    );
  }
  for (const tick of niceTicks(y.lo, y.hi)) {
    const ty = px(mapTo(y, tick));
    parts.push(
      `<line x1="${left}" y1="${ty}" x2="${right}" y2="${ty}" stroke="#dddddd"/>`
    );
    parts.push(
      `<text x="${left - 8}" y="${px(mapTo(y, tick) + 5)}" text-anchor="end" ` +
        `font-size="14" ${FONT}>${formatTick(tick)}</text>`
    );
  }
  parts.push(
    `<rect x="${left}" y="${top}" width="${right - left}" height="${bottom - top}" ` +
      `fill="none" stroke="black"/>`
  );

  for (const curve of data.curves) {
    const points = curve.x
      .map((xv, i) => `${px(mapTo(x, xv))},${px(mapTo(y, curve.y[i]))}`)
      .join(" L");
    const dash = curve.style === "dashed" ? ' stroke-dasharray="7 5"' : "";
    parts.push(
      `<path d="M${points}" fill="none" stroke="${curve.color}" ` +
        `stroke-width="1.8"${dash}/>`
    );
  }

  parts.push(
    `<text x="${left}" y="28" font-size="20" ${FONT}>${escapeText(data.title)}</text>`
  );
  if (data.subtitle) {
    parts.push(
      `<text x="${left}" y="${top - 8}" font-size="13" fill="#444444" ${FONT}>` +
        `${escapeText(data.subtitle)}</text>`
    );
  }
  parts.push(
    `<text x="${px((left + right) / 2)}" y="${HEIGHT - 14}" text-anchor="middle" ` +
      `font-size="16" ${FONT}>${escapeText(data.xLabel)}</text>`
  );
  parts.push(
    `<text x="20" y="${px((top + bottom) / 2)}" text-anchor="middle" font-size="16" ` +
      `${FONT} transform="rotate(-90 20 ${px((top + bottom) / 2)})">` +
      `${escapeText(data.yLabel)}</text>`
  );

  let legendY = top + 10;
  for (const curve of data.curves) {
    if (!curve.label) continue;
    const lx = right + 16;
    const dash = curve.style === "dashed" ? ' stroke-dasharray="7 5"' : "";
    parts.push(
      `<line x1="${lx}" y1="${legendY}" x2="${lx + 34}" y2="${legendY}" ` +
        `stroke="${curve.color}" stroke-width="1.8"${dash}/>`
    );
    parts.push(
      `<text x="${lx + 42}" y="${legendY + 5}" font-size="14" ${FONT}>` +
        `${escapeText(curve.label)}</text>`
    );
    legendY += 24;
  }

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
