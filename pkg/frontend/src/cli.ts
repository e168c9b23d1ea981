#!/usr/bin/env node
/**
 * Command line for the figure renderer.
 *
 * Usage: figure-renderer --csv FILE --figure 1|2|3 --out FILE [--format svg|png]
 * Exit codes: 0 success, 1 usage error, 2 data or I/O failure.
 */

import { pathToFileURL } from "url";

import { CsvError } from "./csv.js";
import { parseFigureId } from "./figures.js";
import { render, type FigureSpec, type ImageFormat } from "./render.js";

const USAGE =
  "usage: figure-renderer --csv FILE --figure 1|2|3 --out FILE [--format svg|png]";

function usageError(message: string): never {
  console.error(message);
  console.error(USAGE);
  process.exit(1);
}

export function parseArgs(argv: string[]): FigureSpec {
  const values = new Map<string, string>();
  for (let i = 0; i < argv.length; i++) {
    const flag = argv[i];
    if (!["--csv", "--figure", "--out", "--format"].includes(flag)) {
      usageError(`unknown argument: ${flag}`);
    }
    const value = argv[i + 1];
    if (value === undefined) {
      usageError(`${flag} needs a value`);
    }
    values.set(flag.slice(2), value);
    i++;
  }
  for (const required of ["csv", "figure", "out"]) {
    if (!values.has(required)) {
      usageError(`missing required argument: --${required}`);
    }
  }
  let figureId;
  try {
    figureId = parseFigureId(values.get("figure")!);
  } catch (err) {
    usageError((err as Error).message);
  }
  const out = values.get("out")!;
  let format = values.get("format");
  if (format === undefined) {
    format = out.toLowerCase().endsWith(".png") ? "png" : "svg";
  }
  if (format !== "svg" && format !== "png") {
    usageError(`format must be svg or png, got "${format}"`);
  }
  return {
    csvPath: values.get("csv")!,
    figureId,
    outputImage: out,
    format: format as ImageFormat,
  };
}

export function main(argv: string[]): void {
  const spec = parseArgs(argv);
  try {
    render(spec);
  } catch (err) {
    if (err instanceof CsvError) {
      console.error(`figure-renderer: ${spec.csvPath}: ${err.message}`);
    } else {
      console.error(`figure-renderer: ${(err as Error).message}`);
    }
    process.exit(2);
  }
  console.log(`wrote ${spec.outputImage}`);
}

if (process.argv[1] && import.meta.url === pathToFileURL(process.argv[1]).href) {
  main(process.argv.slice(2));
}
