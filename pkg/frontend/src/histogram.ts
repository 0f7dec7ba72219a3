/**
 * Parser for the campaign histogram CSV contract:
 * header `x_lo,x_hi,y_lo,y_hi,count`, one row per nonzero bin, LF endings.
 */

export interface Bin {
  xLo: number;
  xHi: number;
  yLo: number;
  yHi: number;
  count: number;
}

export interface Histogram {
  bins: Bin[];
  totalCount: number;
  maxCount: number;
}

export const HEADER = "x_lo,x_hi,y_lo,y_hi,count";

export class CsvError extends Error {
  /** 1-based row number in the file (the header is row 1). */
  readonly row: number;

  constructor(row: number, message: string) {
    super(`row ${row}: ${message}`);
    this.row = row;
  }
}

function parseNumber(field: string, row: number, name: string): number {
  const v = Number(field);
  if (field.trim() === "" || !Number.isFinite(v)) {
    throw new CsvError(row, `${name} is not a finite number: ${JSON.stringify(field)}`);
  }
  return v;
}

export function parseHistogramCsv(text: string): Histogram {
  const lines = text.split("\n");
  if (lines.length > 0 && lines[lines.length - 1] === "") {
    lines.pop(); // trailing LF
  }
  if (lines.length === 0 || lines[0].trim() !== HEADER) {
    throw new CsvError(1, `expected header ${JSON.stringify(HEADER)}`);
  }

  const bins: Bin[] = [];
  let totalCount = 0;
  let maxCount = 0;
  for (let i = 1; i < lines.length; i++) {
    const row = i + 1;
    const line = lines[i];
    if (line.includes("\r")) {
      throw new CsvError(row, "carriage return found; the contract is LF-only");
    }
    const fields = line.split(",");
    if (fields.length !== 5) {
      throw new CsvError(row, `expected 5 fields, got ${fields.length}`);
    }
    const xLo = parseNumber(fields[0], row, "x_lo");
    const xHi = parseNumber(fields[1], row, "x_hi");
    const yLo = parseNumber(fields[2], row, "y_lo");
    const yHi = parseNumber(fields[3], row, "y_hi");
    const count = parseNumber(fields[4], row, "count");
    if (!Number.isInteger(count) || count < 0) {
      throw new CsvError(row, `count must be a non-negative integer, got ${fields[4]}`);
    }
    if (xHi <= xLo || yHi <= yLo) {
      throw new CsvError(row, "bin edges must satisfy x_lo < x_hi and y_lo < y_hi");
    }
    bins.push({ xLo, xHi, yLo, yHi, count });
    totalCount += count;
    if (count > maxCount) maxCount = count;
  }
  return { bins, totalCount, maxCount };
}
