/**
 * Orchestration: read sweep CSVs, emit `<dataset>.svg` plus
 * `<dataset>.plotdata.csv` into an output directory.
 */

import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import { basename, join } from "node:path";

import { groupByDataset, plotDataCsv } from "./plotData.js";
import { parseSweepCsv, SweepTable } from "./sweepTable.js";
import { renderChart } from "./svg.js";

export interface RenderedDataset {
  dataset: string;
  svgPath: string;
  plotDataPath: string;
}

export interface RenderOptions {
  logY?: boolean;
}

export function renderTables(
  tables: SweepTable[],
  outDir: string,
  options: RenderOptions = {},
): RenderedDataset[] {
  mkdirSync(outDir, { recursive: true });
  const merged: SweepTable = { rows: tables.flatMap((t) => t.rows) };
  const out: RenderedDataset[] = [];
  for (const [dataset, curves] of groupByDataset(merged)) {
    const svgPath = join(outDir, `${dataset}.svg`);
    const plotDataPath = join(outDir, `${dataset}.plotdata.csv`);
    writeFileSync(svgPath, renderChart(dataset, curves, { logY: options.logY }), "utf-8");
    writeFileSync(plotDataPath, plotDataCsv(curves), "utf-8");
    out.push({ dataset, svgPath, plotDataPath });
  }
  return out;
}

export function renderFiles(
  csvPaths: string[],
  outDir: string,
  options: RenderOptions = {},
): RenderedDataset[] {
  const tables = csvPaths.map((path) =>
    parseSweepCsv(readFileSync(path, "utf-8"), basename(path)),
  );
  return renderTables(tables, outDir, options);
}
