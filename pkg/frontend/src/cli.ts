/**
 * Usage: render <sweep.csv> [more.csv ...] --out-dir <dir> [--log-y]
 *
 * Writes `<dataset>.svg` and `<dataset>.plotdata.csv` per dataset found in
 * the input CSVs.  Exits non-zero on malformed input (missing columns are
 * named) or IO failure.
 */

import { pathToFileURL } from "node:url";

import { renderFiles } from "./render.js";
import { SweepCsvError } from "./sweepTable.js";

interface Args {
  csvPaths: string[];
  outDir: string;
  logY: boolean;
}

function parseArgs(argv: string[]): Args {
  const csvPaths: string[] = [];
  let outDir: string | undefined;
  let logY = false;
  for (let i = 0; i < argv.length; i += 1) {
    const arg = argv[i];
    if (arg === "--out-dir") {
      outDir = argv[i + 1];
      if (outDir === undefined) throw new SweepCsvError("--out-dir needs a value");
      i += 1;
    } else if (arg === "--log-y") {
      logY = true;
    } else if (arg.startsWith("--")) {
      throw new SweepCsvError(`unknown flag: ${arg}`);
    } else {
      csvPaths.push(arg);
    }
  }
  if (csvPaths.length === 0) throw new SweepCsvError("no input CSV files given");
  if (!outDir) throw new SweepCsvError("--out-dir is required");
  return { csvPaths, outDir, logY };
}

export function main(argv: string[]): number {
  try {
    const args = parseArgs(argv);
    const rendered = renderFiles(args.csvPaths, args.outDir, { logY: args.logY });
    for (const entry of rendered) {
      console.log(`${entry.dataset}: ${entry.svgPath} + ${entry.plotDataPath}`);
    }
    return 0;
  } catch (error) {
    if (error instanceof SweepCsvError || error instanceof Error) {
      console.error(`error: ${error.message}`);
      return 1;
    }
    throw error;
  }
}

if (process.argv[1] && import.meta.url === pathToFileURL(process.argv[1]).href) {
  process.exitCode = main(process.argv.slice(2));
}
