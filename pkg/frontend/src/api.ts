/**
 * Thin client over the solver service.  All numeric truth lives
 * server-side; this module only moves documents.
 *
 * One in-flight request per command kind: a newer solve aborts the
 * solve already on the wire, so stale responses never land.
 */

import {
  IntervalMatrixDoc,
  MatrixDoc,
  Rule,
  ScenarioDoc,
  SensitivityDoc,
  SeriesDoc,
  SolutionDoc,
  WhatIfDoc,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly kind: string,
    readonly detail: string,
  ) {
    super(`${kind} (${status}): ${detail}`);
  }
}

export interface SolveParams {
  rule?: Rule;
  dominance?: "weak" | "strict";
}

export type WhatIfRequest =
  | { entry: [string, string]; delta: number; rule?: Rule; dominance?: string }
  | { budget?: number; step?: number; dominance?: string };

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  private inflight = new Map<string, AbortController>();

  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request<T>(
    command: string, method: string, path: string, body?: string,
  ): Promise<T> {
    this.inflight.get(command)?.abort();
    const controller = new AbortController();
    this.inflight.set(command, controller);
    try {
      const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
        method,
        body,
        headers: body !== undefined ? { "Content-Type": "application/json" } : undefined,
        signal: controller.signal,
      });
      const payload = await response.json();
      if (!response.ok) {
        throw new ApiError(
          response.status,
          (payload as { error?: string }).error ?? "Error",
          (payload as { detail?: string }).detail ?? "request failed",
        );
      }
      return payload as T;
    } finally {
      if (this.inflight.get(command) === controller) {
        this.inflight.delete(command);
      }
    }
  }

  putScenario(id: string, document: ScenarioDoc | string): Promise<{ id: string }> {
    const body = typeof document === "string" ? document : JSON.stringify(document);
    return this.request("put", "PUT", `/scenarios/${id}`, body);
  }

  getScenario(id: string): Promise<ScenarioDoc> {
    return this.request("get", "GET", `/scenarios/${id}`);
  }

  build(id: string, rule?: Rule): Promise<MatrixDoc | IntervalMatrixDoc> {
    const suffix = rule ? `?rule=${rule}` : "";
    return this.request("build", "POST", `/scenarios/${id}/build${suffix}`);
  }

  solve(id: string, params: SolveParams = {}): Promise<SolutionDoc> {
    const query = new URLSearchParams();
    if (params.rule) {
      query.set("rule", params.rule);
    }
    if (params.dominance) {
      query.set("dominance", params.dominance);
    }
    const suffix = query.toString() ? `?${query}` : "";
    return this.request("solve", "POST", `/scenarios/${id}/solve${suffix}`);
  }

  whatif(id: string, body: WhatIfRequest): Promise<SensitivityDoc | WhatIfDoc> {
    return this.request("whatif", "POST", `/scenarios/${id}/whatif`,
                        JSON.stringify(body));
  }

  timeline(id: string, rule?: Rule): Promise<SeriesDoc> {
    const suffix = rule ? `?rule=${rule}` : "";
    return this.request("timeline", "GET", `/scenarios/${id}/timeline${suffix}`);
  }
}
