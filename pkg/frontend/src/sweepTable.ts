/**
 * Parsing and validation of the sweep CSV schema published by the
 * intrinsic-dim CLI:
 *
 *   dataset,min_support,min_confidence,num_rules,integral,dimension[,...extras]
 *
 * Numeric columns are plain decimals; the dimension column may hold the
 * literal `inf`, which marks a gap (never a plottable number).  Raw field
 * strings are kept alongside parsed numbers so downstream plot-data output
 * is byte-stable regardless of float formatting.
 */

export const REQUIRED_COLUMNS = [
  "dataset",
  "min_support",
  "min_confidence",
  "num_rules",
  "integral",
  "dimension",
] as const;

export interface SweepRow {
  dataset: string;
  minSupport: number;
  minConfidence: number;
  numRules: number;
  /** null encodes an `inf` dimension: a gap in the curve. */
  dimension: number | null;
  raw: {
    minSupport: string;
    minConfidence: string;
    dimension: string;
  };
}

export interface SweepTable {
  rows: SweepRow[];
}

export class SweepCsvError extends Error {}

function parseFinite(field: string, column: string, where: string): number {
  const value = Number(field);
  if (field.trim() === "" || !Number.isFinite(value)) {
    throw new SweepCsvError(`${where}: ${column} is not a finite number: ${JSON.stringify(field)}`);
  }
  return value;
}

export function parseSweepCsv(text: string, source = "<sweep csv>"): SweepTable {
  const lines = text
    .split(/\r?\n/)
    .filter((line) => line.length > 0 && !line.startsWith("#"));
  if (lines.length === 0) {
    throw new SweepCsvError(`${source}: empty file`);
  }
  const header = lines[0].split(",");
  const index = new Map<string, number>(header.map((name, i) => [name, i]));
  const missing = REQUIRED_COLUMNS.filter((column) => !index.has(column));
  if (missing.length > 0) {
    throw new SweepCsvError(`${source}: missing column(s): ${missing.join(", ")}`);
  }
  const rows: SweepRow[] = [];
  lines.slice(1).forEach((line, i) => {
    const where = `${source}:${i + 2}`;
    const fields = line.split(",");
    if (fields.length < header.length) {
      throw new SweepCsvError(`${where}: expected ${header.length} fields, got ${fields.length}`);
    }
    const field = (column: string): string => fields[index.get(column)!];
    const rawDimension = field("dimension");
    rows.push({
      dataset: field("dataset"),
      minSupport: parseFinite(field("min_support"), "min_support", where),
      minConfidence: parseFinite(field("min_confidence"), "min_confidence", where),
      numRules: parseFinite(field("num_rules"), "num_rules", where),
      dimension: rawDimension === "inf" ? null : parseFinite(rawDimension, "dimension", where),
      raw: {
        minSupport: field("min_support"),
        minConfidence: field("min_confidence"),
        dimension: rawDimension,
      },
    });
  });
  if (rows.length === 0) {
    throw new SweepCsvError(`${source}: no data rows`);
  }
  return { rows };
}
