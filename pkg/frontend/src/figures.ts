/**
 * Figure schemas and curve extraction.
 *
 * Figure 1 plots the one-body quantities e(m) - m and P(m) against m.
 * Figures 2 and 3 plot the N-body energy bounds against m, one curve
 * pair per boson count N: upper bound solid, lower bound dashed (the
 * captions' convention).
 */

import { CsvError, type Table } from "./csv.js";

export type FigureId = 1 | 2 | 3;
export type LineStyle = "solid" | "dashed";

export interface Curve {
  label: string;
  style: LineStyle;
  color: string;
  x: number[];
  y: number[];
}

export interface FigureData {
  title: string;
  subtitle: string;
  xLabel: string;
  yLabel: string;
  curves: Curve[];
}

export const FIGURE_HEADERS: Record<FigureId, string[]> = {
  1: ["m", "e_minus_m", "P"],
  2: ["m", "N", "E_lower_const", "E_upper"],
  3: ["m", "N", "E_lower_running", "E_upper"],
};

export function parseFigureId(text: string): FigureId {
  if (text === "1" || text === "2" || text === "3") {
    return Number(text) as FigureId;
  }
  throw new CsvError(`figure must be 1, 2, or 3, got "${text}"`);
}

// Okabe-Ito palette: distinguishable in print and for color-blind readers.
const PALETTE = [
  "#0072b2",
  "#d55e00",
  "#009e73",
  "#cc79a7",
  "#e69f00",
  "#56b4e9",
  "#000000",
  "#999999",
];

function extractOneBody(table: Table): FigureData {
  const m = table.rows.map((r) => r[0]);
  return {
    title: "Figure 1",
    subtitle: "",
    xLabel: "m (natural units)",
    yLabel: "e(m) - m,  P(m)",
    curves: [
      {
        label: "e(m) - m",
        style: "solid",
        color: PALETTE[0],
        x: m,
        y: table.rows.map((r) => r[1]),
      },
      {
        label: "P(m)",
        style: "dashed",
        color: PALETTE[1],
        x: m,
        y: table.rows.map((r) => r[2]),
      },
    ],
  };
}

function extractBounds(table: Table, id: 2 | 3): FigureData {
  const groups = new Map<number, { m: number[]; lower: number[]; upper: number[] }>();
  for (let i = 0; i < table.rows.length; i++) {
    const [m, n, lower, upper] = table.rows[i];
    if (!Number.isInteger(n) || n < 2) {
      throw new CsvError(
        `row ${i + 1}, column "N": boson count must be an integer >= 2, got ${n}`
      );
    }
    let group = groups.get(n);
    if (group === undefined) {
      group = { m: [], lower: [], upper: [] };
      groups.set(n, group);
    }
    group.m.push(m);
    group.lower.push(lower);
    group.upper.push(upper);
  }
  const curves: Curve[] = [];
  const counts = [...groups.keys()].sort((a, b) => a - b);
  counts.forEach((n, i) => {
    const group = groups.get(n)!;
    const color = PALETTE[i % PALETTE.length];
    curves.push({ label: `N = ${n}`, style: "solid", color, x: group.m, y: group.upper });
    curves.push({ label: "", style: "dashed", color, x: group.m, y: group.lower });
  });
  return {
    title: `Figure ${id}`,
    subtitle: "upper: solid,  lower: dashed",
    xLabel: "m (natural units)",
    yLabel: "E",
    curves,
  };
}

export function extractFigure(id: FigureId, table: Table): FigureData {
  return id === 1 ? extractOneBody(table) : extractBounds(table, id);
}
