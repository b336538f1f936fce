/**
 * Pure view models: turn service documents into render-ready data.
 *
 * Every number displayed comes verbatim from a service response; these
 * builders format, compare, and arrange, but never compute game values.
 */

import {
  IntervalMatrixDoc,
  MatrixDoc,
  SeriesDoc,
  SolutionDoc,
  TraceEventDoc,
} from "./types.js";

export function formatValue(value: number, digits = 4): string {
  const rounded = Number(value.toFixed(digits));
  return Object.is(rounded, -0) ? "0" : String(rounded);
}

export interface Bar {
  label: string;
  probability: number;
  percent: number;
  active: boolean;
}

export interface SolutionView {
  value: number;
  valueText: string;
  negative: boolean;
  warning: string | null;
  kindText: string;
  saddleText: string | null;
  rowBars: Bar[];
  colBars: Bar[];
  eliminatedRows: string[];
  eliminatedCols: string[];
  traceLines: string[];
  movement: string | null;
  boundsText: string | null;
}

const WITHDRAW_WARNING =
  "Negative game value: consider withdrawing or reworking the strategy.";

function bars(labels: string[], strategy: number[]): Bar[] {
  return labels.map((label, i) => ({
    label,
    probability: strategy[i],
    percent: Math.round(strategy[i] * 1000) / 10,
    active: strategy[i] > 0,
  }));
}

function saddleText(saddle: [string, string] | null): string | null {
  return saddle ? `(${saddle[0]},${saddle[1]})` : null;
}

/** Movement annotation between two consecutive solve responses. */
export function movementText(
  previous: SolutionDoc | null | undefined, current: SolutionDoc,
): string | null {
  if (!previous) {
    return null;
  }
  const parts: string[] = [];
  if (previous.saddle && current.saddle &&
      saddleText(previous.saddle) !== saddleText(current.saddle)) {
    parts.push(`${saddleText(previous.saddle)} → ${saddleText(current.saddle)}`);
  }
  if (previous.kind !== current.kind) {
    parts.push(`${previous.kind} → ${current.kind}`);
  }
  if (previous.value !== current.value) {
    parts.push(
      `value ${formatValue(previous.value)} → ${formatValue(current.value)}`);
  }
  return parts.length ? parts.join("  |  ") : null;
}

export function buildSolutionView(
  doc: SolutionDoc, previous?: SolutionDoc | null,
): SolutionView {
  const negative = doc.value < 0;
  return {
    value: doc.value,
    valueText: formatValue(doc.value),
    negative,
    warning: negative ? WITHDRAW_WARNING : null,
    kindText: doc.kind === "pure" ? "pure saddle" : "mixed strategies",
    saddleText: saddleText(doc.saddle),
    rowBars: bars(doc.rows, doc.row_strategy),
    colBars: bars(doc.cols, doc.col_strategy),
    eliminatedRows: doc.trace.filter((e) => e.line === "row").map((e) => e.label),
    eliminatedCols: doc.trace.filter((e) => e.line === "column").map((e) => e.label),
    traceLines: doc.trace.map((e) => e.text),
    movement: movementText(previous, doc),
    boundsText: doc.value_bounds
      ? `[${formatValue(doc.value_bounds[0])}, ${formatValue(doc.value_bounds[1])}]`
      : null,
  };
}

export interface MatrixCell {
  value: number;
  text: string;
  heat: number; // 0..1 magnitude relative to the matrix
  positive: boolean;
  struck: boolean;
  saddle: boolean;
}

export interface MatrixView {
  rows: string[];
  cols: string[];
  cells: MatrixCell[][];
  struckRows: string[];
  struckCols: string[];
}

export function buildMatrixView(
  doc: MatrixDoc | IntervalMatrixDoc,
  trace: TraceEventDoc[] = [],
  saddle: [string, string] | null = null,
): MatrixView {
  const struckRows = trace.filter((e) => e.line === "row").map((e) => e.label);
  const struckCols = trace.filter((e) => e.line === "column").map((e) => e.label);
  const magnitudes = doc.entries.flat().map((v) =>
    Array.isArray(v) ? Math.max(Math.abs(v[0]), Math.abs(v[1])) : Math.abs(v));
  const peak = Math.max(1e-12, ...magnitudes);
  const cells = doc.rows.map((row, i) =>
    doc.cols.map((col, j) => {
      const raw = doc.entries[i][j];
      // interval cells show both endpoints; shading keys on the worse one
      const value = Array.isArray(raw) ? raw[0] : raw;
      const text = Array.isArray(raw)
        ? `${formatValue(raw[0])} … ${formatValue(raw[1])}`
        : formatValue(raw);
      const magnitude = Array.isArray(raw)
        ? Math.max(Math.abs(raw[0]), Math.abs(raw[1]))
        : Math.abs(raw);
      return {
        value,
        text,
        heat: magnitude / peak,
        positive: value >= 0,
        struck: struckRows.includes(row) || struckCols.includes(col),
        saddle: saddle !== null && saddle[0] === row && saddle[1] === col,
      };
    }),
  );
  return { rows: doc.rows, cols: doc.cols, cells, struckRows, struckCols };
}

export interface PlotPoint {
  x: number;
  y: number;
  label: string;
  value: number;
}

export interface PolylineView {
  points: PlotPoint[];
  path: string;
  zeroY: number | null;
}

function polyline(
  samples: { label: string; value: number }[], width: number, height: number,
): PolylineView {
  const pad = 8;
  const values = samples.map((s) => s.value);
  const low = Math.min(0, ...values);
  const high = Math.max(0, ...values);
  const spanY = high - low || 1;
  const innerW = width - 2 * pad;
  const innerH = height - 2 * pad;
  const step = samples.length > 1 ? innerW / (samples.length - 1) : 0;
  const points = samples.map((sample, i) => ({
    x: pad + i * step,
    y: pad + (high - sample.value) / spanY * innerH,
    label: sample.label,
    value: sample.value,
  }));
  const path = points
    .map((p, i) => `${i === 0 ? "M" : "L"}${p.x.toFixed(1)},${p.y.toFixed(1)}`)
    .join(" ");
  const zeroY = low <= 0 && high >= 0
    ? pad + (high / spanY) * innerH
    : null;
  return { points, path, zeroY };
}

export function buildTimelineView(
  doc: SeriesDoc, width = 420, height = 140,
): PolylineView {
  return polyline(
    doc.periods.map((p) => ({ label: `period ${p.period}`, value: p.value })),
    width, height,
  );
}

export function buildWhatIfCurve(
  samples: { delta: number; value: number }[], width = 420, height = 140,
): PolylineView {
  const ordered = [...samples].sort((a, b) => a.delta - b.delta);
  return polyline(
    ordered.map((s) => ({ label: `Δ ${formatValue(s.delta)}`, value: s.value })),
    width, height,
  );
}
