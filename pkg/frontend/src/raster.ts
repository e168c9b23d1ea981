/**
 * Tiny RGB raster canvas: Bresenham lines, filled rectangles, and
 * bitmap-font text.  No anti-aliasing, so output bytes are exactly
 * reproducible across platforms.
 */

import { GLYPH_HEIGHT, GLYPH_WIDTH, glyphFor } from "./font.js";

export type Color = [number, number, number];

export function parseColor(hex: string): Color {
  const v = parseInt(hex.slice(1), 16);
  return [(v >> 16) & 0xff, (v >> 8) & 0xff, v & 0xff];
}

export class Canvas {
  readonly width: number;
  readonly height: number;
  readonly data: Uint8Array;

  constructor(width: number, height: number) {
    this.width = width;
    this.height = height;
    this.data = new Uint8Array(width * height * 3).fill(255);
  }

  set(x: number, y: number, color: Color): void {
    if (x < 0 || y < 0 || x >= this.width || y >= this.height) return;
    const k = (y * this.width + x) * 3;
    this.data[k] = color[0];
    this.data[k + 1] = color[1];
    this.data[k + 2] = color[2];
  }

  get(x: number, y: number): Color {
    const k = (y * this.width + x) * 3;
    return [this.data[k], this.data[k + 1], this.data[k + 2]];
  }

  fillRect(x0: number, y0: number, w: number, h: number, color: Color): void {
    for (let y = y0; y < y0 + h; y++) {
      for (let x = x0; x < x0 + w; x++) this.set(x, y, color);
    }
  }

  /** 1-px Bresenham segment; thickness 2 doubles it perpendicular-ish. */
  line(x0f: number, y0f: number, x1f: number, y1f: number, color: Color, thickness = 1): void {
    let x0 = Math.round(x0f);
    let y0 = Math.round(y0f);
    const x1 = Math.round(x1f);
    const y1 = Math.round(y1f);
    const dx = Math.abs(x1 - x0);
    const dy = -Math.abs(y1 - y0);
    const sx = x0 < x1 ? 1 : -1;
    const sy = y0 < y1 ? 1 : -1;
    const steep = dy < -dx;
    let err = dx + dy;
    for (;;) {
      this.set(x0, y0, color);
      if (thickness > 1) {
        // Widen across the dominant direction.
        if (steep) this.set(x0 + 1, y0, color);
        else this.set(x0, y0 + 1, color);
      }
      if (x0 === x1 && y0 === y1) break;
      const e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        x0 += sx;
      }
      if (e2 <= dx) {
        err += dx;
        y0 += sy;
      }
    }
  }

  text(x: number, y: number, content: string, color: Color, scale = 2): void {
    let cx = Math.round(x);
    const cy = Math.round(y);
    for (const char of content) {
      const rows = glyphFor(char);
      for (let r = 0; r < GLYPH_HEIGHT; r++) {
        for (let c = 0; c < GLYPH_WIDTH; c++) {
          if ((rows[r] >> (GLYPH_WIDTH - 1 - c)) & 1) {
            this.fillRect(cx + c * scale, cy + r * scale, scale, scale, color);
          }
        }
      }
      cx += (GLYPH_WIDTH + 1) * scale;
    }
  }

  /** Text reading bottom-to-top, for the y-axis label. */
  textRotated(x: number, y: number, content: string, color: Color, scale = 2): void {
    const cx = Math.round(x);
    let cy = Math.round(y);
    for (const char of content) {
      const rows = glyphFor(char);
      for (let r = 0; r < GLYPH_HEIGHT; r++) {
        for (let c = 0; c < GLYPH_WIDTH; c++) {
          if ((rows[r] >> (GLYPH_WIDTH - 1 - c)) & 1) {
            // (col, row) -> (row, -col): rotate 90 degrees counterclockwise.
            this.fillRect(cx + r * scale, cy - c * scale, scale, scale, color);
          }
        }
      }
      cy -= (GLYPH_WIDTH + 1) * scale;
    }
  }
}

export function textWidth(content: string, scale = 2): number {
  return content.length * (GLYPH_WIDTH + 1) * scale - scale;
}
