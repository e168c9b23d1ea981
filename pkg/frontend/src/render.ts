/**
 * Rendering entry point: CSV file in, image file out.
 *
 * The input CSV is the only interface to the physics code; rendering
 * never recomputes anything.  The image bytes are built fully before
 * the output file is touched, so a schema failure leaves no partial
 * image behind.
 */

import { readFileSync, writeFileSync } from "fs";

import { parseNumericCsv } from "./csv.js";
import { FIGURE_HEADERS, extractFigure, type FigureId } from "./figures.js";
import { renderPng } from "./png.js";
import { renderSvg } from "./svg.js";

export type ImageFormat = "svg" | "png";

export interface FigureSpec {
  csvPath: string;
  figureId: FigureId;
  outputImage: string;
  format: ImageFormat;
}

export function renderToBytes(
  figureId: FigureId,
  csvText: string,
  format: ImageFormat
): Buffer {
  const table = parseNumericCsv(csvText, FIGURE_HEADERS[figureId]);
  const data = extractFigure(figureId, table);
  return format === "svg" ? Buffer.from(renderSvg(data), "utf8") : renderPng(data);
}

export function render(spec: FigureSpec): void {
  const text = readFileSync(spec.csvPath, "utf8");
  const bytes = renderToBytes(spec.figureId, text, spec.format);
  writeFileSync(spec.outputImage, bytes);
}
