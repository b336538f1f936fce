import assert from "node:assert/strict";
import { test } from "node:test";

import { ApiClient, ApiError } from "../src/api.js";

interface Call {
  url: string;
  method?: string;
  body?: unknown;
  signal?: AbortSignal | null;
}

function recordingClient(payload: unknown = { ok: true }, status = 200) {
  const calls: Call[] = [];
  const client = new ApiClient("http://svc", async (url, init) => {
    calls.push({
      url,
      method: init?.method,
      body: typeof init?.body === "string" ? JSON.parse(init.body) : undefined,
      signal: init?.signal,
    });
    return new Response(JSON.stringify(payload), { status });
  });
  return { client, calls };
}

test("solve posts to the scenario with query parameters", async () => {
  const { client, calls } = recordingClient();
  await client.solve("demo", { rule: "diff", dominance: "strict" });
  assert.equal(calls[0].url, "http://svc/scenarios/demo/solve?rule=diff&dominance=strict");
  assert.equal(calls[0].method, "POST");
});

test("put uploads the document body verbatim", async () => {
  const { client, calls } = recordingClient();
  await client.putScenario("demo", '{"x": 1.0}');
  assert.equal(calls[0].url, "http://svc/scenarios/demo");
  assert.equal(calls[0].method, "PUT");
  assert.deepEqual(calls[0].body, { x: 1 });
});

test("whatif sends entry deltas in the body", async () => {
  const { client, calls } = recordingClient();
  await client.whatif("demo", { entry: ["A", "E"], delta: 0.05 });
  assert.equal(calls[0].url, "http://svc/scenarios/demo/whatif");
  assert.deepEqual(calls[0].body, { entry: ["A", "E"], delta: 0.05 });
});

test("timeline and build carry the rule in the query", async () => {
  const { client, calls } = recordingClient();
  await client.timeline("demo", "entropy");
  await client.build("demo", "diff");
  assert.equal(calls[0].url, "http://svc/scenarios/demo/timeline?rule=entropy");
  assert.equal(calls[1].url, "http://svc/scenarios/demo/build?rule=diff");
});

test("service errors surface as ApiError with detail", async () => {
  const { client } = recordingClient(
    { error: "ScaleError", detail: "wrong rule" }, 422);
  await assert.rejects(
    () => client.solve("demo"),
    (exc: unknown) => exc instanceof ApiError
      && exc.status === 422
      && exc.kind === "ScaleError"
      && /wrong rule/.test(exc.detail),
  );
});

test("a newer command aborts the one in flight", async () => {
  const signals: (AbortSignal | null | undefined)[] = [];
  let calls = 0;
  const client = new ApiClient("http://svc", (url, init) => {
    calls += 1;
    signals.push(init?.signal);
    if (calls === 1) {
      // hang forever; the next solve should abort this signal
      return new Promise<Response>(() => undefined);
    }
    return Promise.resolve(new Response("{}", { status: 200 }));
  });
  const first = client.solve("demo");
  await client.solve("demo");
  assert.equal(signals[0]?.aborted, true);
  assert.equal(signals[1]?.aborted, false);
  void first; // never settles; its transport was cancelled
});

test("different command kinds do not cancel each other", async () => {
  const signals: (AbortSignal | null | undefined)[] = [];
  const client = new ApiClient("http://svc", (url, init) => {
    signals.push(init?.signal);
    return Promise.resolve(new Response("{}", { status: 200 }));
  });
  await client.solve("demo");
  await client.timeline("demo");
  assert.equal(signals[0]?.aborted, false);
  assert.equal(signals[1]?.aborted, false);
});
