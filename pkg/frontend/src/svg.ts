/**
 * Hand-rolled SVG chart: dimension vs. min-support, one polyline per
 * confidence level.  Gap points (infinite dimension) split a curve into
 * separate segments; isolated finite points still get a marker.  Output is
 * deterministic for a given input (fixed palette, fixed formatting).
 */

import { Curve, CurvePoint } from "./plotData.js";

export interface ChartOptions {
  logY?: boolean;
  width?: number;
  height?: number;
}

const PALETTE = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#17becf",
  "#e377c2",
];

const MARGIN = { top: 42, right: 170, bottom: 56, left: 74 };

function fmt(value: number): string {
  return value.toFixed(2);
}

function tickLabel(value: number): string {
  const abs = Math.abs(value);
  if (abs !== 0 && (abs >= 10_000 || abs < 0.001)) {
    return value.toExponential(2);
  }
  return String(Number(value.toPrecision(4)));
}

interface Scale {
  (value: number): number;
  ticks: number[];
}

function linearScale(domain: [number, number], range: [number, number]): Scale {
  let [d0, d1] = domain;
  if (d0 === d1) {
    const pad = Math.max(Math.abs(d0) * 0.05, 0.5);
    d0 -= pad;
    d1 += pad;
  }
  const scale = ((value: number) =>
    range[0] + ((value - d0) / (d1 - d0)) * (range[1] - range[0])) as Scale;
  const count = 5;
  scale.ticks = Array.from({ length: count }, (_, i) => d0 + ((d1 - d0) * i) / (count - 1));
  return scale;
}

function logScale(domain: [number, number], range: [number, number]): Scale {
  const lo = Math.max(domain[0], 1e-9);
  const hi = Math.max(domain[1], lo);
  const inner = linearScale([Math.log10(lo), Math.log10(hi === lo ? lo * 10 : hi)], range);
  const scale = ((value: number) => inner(Math.log10(Math.max(value, 1e-9)))) as Scale;
  scale.ticks = inner.ticks.map((t) => 10 ** t);
  return scale;
}

function segments(points: CurvePoint[]): CurvePoint[][] {
  const runs: CurvePoint[][] = [];
  let current: CurvePoint[] = [];
  for (const point of points) {
    if (point.dimension === null) {
      if (current.length > 0) runs.push(current);
      current = [];
    } else {
      current.push(point);
    }
  }
  if (current.length > 0) runs.push(current);
  return runs;
}

export function renderChart(dataset: string, curves: Curve[], options: ChartOptions = {}): string {
  const width = options.width ?? 720;
  const height = options.height ?? 480;
  const plotW: [number, number] = [MARGIN.left, width - MARGIN.right];
  const plotH: [number, number] = [height - MARGIN.bottom, MARGIN.top];

  const supports = curves.flatMap((c) => c.points.map((p) => p.support));
  const finiteDims = curves.flatMap((c) =>
    c.points.filter((p) => p.dimension !== null).map((p) => p.dimension as number),
  );

  const x = linearScale(
    supports.length > 0 ? [Math.min(...supports), Math.max(...supports)] : [0, 1],
    plotW,
  );
  const yDomain: [number, number] =
    finiteDims.length > 0 ? [Math.min(...finiteDims), Math.max(...finiteDims)] : [0, 1];
  const y = options.logY ? logScale(yDomain, plotH) : linearScale(yDomain, plotH);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="sans-serif">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<text x="${(plotW[0] + plotW[1]) / 2}" y="24" text-anchor="middle" font-size="16">${dataset}</text>`,
  );

  // axes
  parts.push(
    `<line x1="${plotW[0]}" y1="${plotH[0]}" x2="${plotW[1]}" y2="${plotH[0]}" stroke="black"/>`,
  );
  parts.push(
    `<line x1="${plotW[0]}" y1="${plotH[0]}" x2="${plotW[0]}" y2="${plotH[1]}" stroke="black"/>`,
  );
  for (const tick of x.ticks) {
    const px = x(tick);
    parts.push(`<line x1="${fmt(px)}" y1="${plotH[0]}" x2="${fmt(px)}" y2="${plotH[0] + 5}" stroke="black"/>`);
    parts.push(
      `<text x="${fmt(px)}" y="${plotH[0] + 20}" text-anchor="middle" font-size="11">${tickLabel(tick)}</text>`,
    );
  }
  for (const tick of y.ticks) {
    const py = y(tick);
    parts.push(`<line x1="${plotW[0] - 5}" y1="${fmt(py)}" x2="${plotW[0]}" y2="${fmt(py)}" stroke="black"/>`);
    parts.push(
      `<text x="${plotW[0] - 9}" y="${fmt(py + 4)}" text-anchor="end" font-size="11">${tickLabel(tick)}</text>`,
    );
  }
  parts.push(
    `<text x="${(plotW[0] + plotW[1]) / 2}" y="${height - 14}" text-anchor="middle" font-size="13">min_support</text>`,
  );
  parts.push(
    `<text x="20" y="${(plotH[0] + plotH[1]) / 2}" text-anchor="middle" font-size="13" ` +
      `transform="rotate(-90 20 ${(plotH[0] + plotH[1]) / 2})">dimension${options.logY ? " (log)" : ""}</text>`,
  );

  // curves: polyline per gap-free segment, markers at every finite point
  curves.forEach((curve, i) => {
    const color = PALETTE[i % PALETTE.length];
    for (const run of segments(curve.points)) {
      if (run.length > 1) {
        const coords = run
          .map((p) => `${fmt(x(p.support))},${fmt(y(p.dimension as number))}`)
          .join(" ");
        parts.push(
          `<polyline fill="none" stroke="${color}" stroke-width="2" points="${coords}"/>`,
        );
      }
      for (const p of run) {
        parts.push(
          `<circle cx="${fmt(x(p.support))}" cy="${fmt(y(p.dimension as number))}" r="3" fill="${color}"/>`,
        );
      }
    }
  });

  // legend
  curves.forEach((curve, i) => {
    const color = PALETTE[i % PALETTE.length];
    const ly = MARGIN.top + 8 + i * 20;
    const lx = width - MARGIN.right + 16;
    parts.push(
      `<line x1="${lx}" y1="${ly}" x2="${lx + 22}" y2="${ly}" stroke="${color}" stroke-width="2"/>`,
    );
    parts.push(
      `<text x="${lx + 28}" y="${ly + 4}" font-size="12">conf ${curve.rawConfidence}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
