/**
 * Strict reader for the numeric CSVs published by the bounds CLI.
 *
 * The CSV contract is deliberately rigid: one header line that must
 * match the expected schema byte for byte, comma-separated numeric
 * fields, no quoting.  Schema mismatches are reported per column by
 * name so a caller can see exactly which column is wrong.
 */

export interface Table {
  header: string[];
  rows: number[][];
}

export class CsvError extends Error {}

function headerDiff(expected: string[], got: string[]): string {
  const parts: string[] = [];
  const n = Math.max(expected.length, got.length);
  for (let i = 0; i < n; i++) {
    const want = expected[i];
    const have = got[i];
    if (want === have) continue;
    if (want === undefined) {
      parts.push(`unexpected extra column "${have}"`);
    } else if (have === undefined) {
      parts.push(`missing column "${want}"`);
    } else {
      parts.push(`column ${i + 1}: expected "${want}", got "${have}"`);
    }
  }
  return parts.join("; ");
}

export function parseNumericCsv(text: string, expectedHeader: string[]): Table {
  const lines = text.split(/\r?\n/);
  while (lines.length > 0 && lines[lines.length - 1] === "") lines.pop();
  if (lines.length === 0) {
    throw new CsvError("CSV is empty");
  }
  const header = lines[0].split(",");
  if (
    header.length !== expectedHeader.length ||
    header.some((name, i) => name !== expectedHeader[i])
  ) {
    throw new CsvError(
      `header mismatch (expected "${expectedHeader.join(",")}"): ` +
        headerDiff(expectedHeader, header)
    );
  }
  if (lines.length === 1) {
    throw new CsvError("CSV has a header but no data rows");
  }
  const rows: number[][] = [];
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== header.length) {
      throw new CsvError(
        `row ${i}: expected ${header.length} fields, got ${cells.length}`
      );
    }
    const row = new Array<number>(cells.length);
    for (let j = 0; j < cells.length; j++) {
      const value = Number(cells[j]);
      if (cells[j].trim() === "" || !Number.isFinite(value)) {
        throw new CsvError(
          `row ${i}, column "${header[j]}": not a finite number: "${cells[j]}"`
        );
      }
      row[j] = value;
    }
    rows.push(row);
  }
  return { header, rows };
}
