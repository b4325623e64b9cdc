/**
 * Curve extraction and the plot-data sidecar.
 *
 * One curve per confidence level, points sorted by support; `inf`
 * dimensions stay in the curve as gaps.  The sidecar CSV repeats the input
 * fields verbatim, so it is a pure function of the input CSV no matter how
 * the renderer styles things.
 */

import { SweepCsvError, SweepRow, SweepTable } from "./sweepTable.js";

export interface CurvePoint {
  support: number;
  /** null = gap (infinite dimension). */
  dimension: number | null;
  rawSupport: string;
  rawDimension: string;
}

export interface Curve {
  confidence: number;
  rawConfidence: string;
  points: CurvePoint[];
}

export const PLOTDATA_HEADER = "min_confidence,min_support,dimension";

export function curvesForDataset(rows: SweepRow[], dataset: string): Curve[] {
  const byConfidence = new Map<string, SweepRow[]>();
  for (const row of rows) {
    const bucket = byConfidence.get(row.raw.minConfidence);
    if (bucket) {
      bucket.push(row);
    } else {
      byConfidence.set(row.raw.minConfidence, [row]);
    }
  }
  const curves: Curve[] = [];
  for (const [rawConfidence, bucket] of byConfidence) {
    const points = bucket
      .slice()
      .sort((a, b) => a.minSupport - b.minSupport)
      .map((row) => ({
        support: row.minSupport,
        dimension: row.dimension,
        rawSupport: row.raw.minSupport,
        rawDimension: row.raw.dimension,
      }));
    points.forEach((point, i) => {
      if (i > 0 && !(point.support > points[i - 1].support)) {
        throw new SweepCsvError(
          `${dataset}: duplicate support ${point.rawSupport} at confidence ${rawConfidence}`,
        );
      }
    });
    curves.push({ confidence: bucket[0].minConfidence, rawConfidence, points });
  }
  curves.sort((a, b) => a.confidence - b.confidence);
  return curves;
}

export function groupByDataset(table: SweepTable): Map<string, Curve[]> {
  const names = new Map<string, SweepRow[]>();
  for (const row of table.rows) {
    const bucket = names.get(row.dataset);
    if (bucket) {
      bucket.push(row);
    } else {
      names.set(row.dataset, [row]);
    }
  }
  const out = new Map<string, Curve[]>();
  for (const [dataset, rows] of names) {
    out.set(dataset, curvesForDataset(rows, dataset));
  }
  return out;
}

export function plotDataCsv(curves: Curve[]): string {
  const lines = [PLOTDATA_HEADER];
  for (const curve of curves) {
    for (const point of curve.points) {
      lines.push(`${curve.rawConfidence},${point.rawSupport},${point.rawDimension}`);
    }
  }
  return lines.join("\n") + "\n";
}
