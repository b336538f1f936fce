/** Wire types shared with the solver service. */

export type SpanValue = [number, number];
export type ParameterValue = number | SpanValue;
export type Scale = "binary" | "real" | "span";
export type Rule = "diff" | "entropy" | "interval";
export type Side = "assets" | "threats";

export interface ProfileDoc {
  label: string;
  values: ParameterValue[] | null;
}

export interface SchemeDoc {
  names: string[];
  cost_index?: number | null;
}

export interface TimelineDoc {
  periods: number;
  pp: Record<string, number[]>;
}

export interface EntropyDoc {
  costs?: number[];
  probability_floor?: number;
  cost_from_scheme?: boolean;
}

export interface ScenarioDoc {
  scheme: SchemeDoc;
  assets: ProfileDoc[];
  threats: ProfileDoc[];
  timeline?: TimelineDoc | null;
  overrides?: (number | SpanValue)[][] | null;
  rule?: Rule | null;
  entropy?: EntropyDoc | null;
}

export interface TraceEventDoc {
  line: "row" | "column";
  label: string;
  by: string;
  strict: boolean;
  text: string;
}

export interface SolutionDoc {
  type: "game_solution";
  value: number;
  kind: "pure" | "mixed";
  saddle: [string, string] | null;
  rows: string[];
  cols: string[];
  row_strategy: number[];
  col_strategy: number[];
  trace: TraceEventDoc[];
  value_bounds?: [number, number];
}

export interface MatrixDoc {
  type: "payoff_matrix";
  rows: string[];
  cols: string[];
  entries: number[][];
}

export interface IntervalMatrixDoc {
  type: "interval_payoff_matrix";
  rows: string[];
  cols: string[];
  entries: [number, number][][];
}

export interface SeriesPeriodDoc {
  period: number;
  value: number;
  kind: string;
  saddle: [string, string] | null;
}

export interface SeriesDoc {
  type: "value_series";
  rule: string;
  periods: SeriesPeriodDoc[];
}

export interface SensitivityDoc {
  type: "sensitivity";
  entry: [string, string];
  delta: number;
  baseline: number;
  new_value: number;
  value_change: number;
  solution: SolutionDoc;
}

export interface WhatIfDoc {
  type: "whatif_result";
  baseline: number;
  achieved: number;
  delta: number;
  rows: string[];
  cols: string[];
  realization: number[][];
  deviations: number[][];
}

export interface ErrorDoc {
  error: string;
  detail: string;
}
