import assert from "node:assert/strict";
import { test } from "node:test";

import { SessionState } from "../src/state.js";
import { ScenarioDoc } from "../src/types.js";

function realDoc(): ScenarioDoc {
  return {
    scheme: {
      names: ["competition", "trends", "costs", "marketing", "sales", "other"],
    },
    assets: [
      { label: "A", values: [0.88, 0.24, 0.52, 0.91, 0.71, 0.02] },
    ],
    threats: [
      { label: "D", values: [0.81, 0.11, 0.5, 0.22, 0.72, 0.84] },
    ],
  };
}

test("the corrective edit rewrites one strategy parameter", () => {
  const session = new SessionState(realDoc());
  const outcome = session.editParameter("threats", "D", 5, 0.68);
  assert.ok(outcome.ok);
  assert.deepEqual(session.current.threats[0].values,
                   [0.81, 0.11, 0.5, 0.22, 0.72, 0.68]);
  assert.ok(session.dirty);
  assert.ok(session.replayMatches());
});

test("out-of-scale edits are rejected inline", () => {
  const session = new SessionState({
    scheme: { names: ["p1"] },
    assets: [{ label: "A", values: [1] }],
    threats: [{ label: "C", values: [0] }],
  });
  const outcome = session.editParameter("assets", "A", 0, 0.5);
  assert.ok(!outcome.ok && /0 or 1/.test(outcome.error));
  assert.equal(session.current.assets[0].values?.[0], 1);
  assert.equal(session.edits.length, 0);
});

test("undo restores the previous document", () => {
  const session = new SessionState(realDoc());
  session.editParameter("threats", "D", 5, 0.68);
  assert.ok(session.undo());
  assert.deepEqual(session.current, session.initial);
  assert.equal(session.edits.length, 0);
  assert.ok(!session.undo());
});

test("history replay reproduces the current document", () => {
  const session = new SessionState(realDoc());
  const values = [0.3, 0.6, 0.12, 0.9, 0.44];
  values.forEach((v, i) => {
    session.editParameter(i % 2 === 0 ? "assets" : "threats",
                          i % 2 === 0 ? "A" : "D", i % 6, v);
  });
  session.undo();
  session.editParameter("assets", "A", 2, 0.77);
  assert.ok(session.replayMatches());
});

test("loading a new document restarts the history", () => {
  const session = new SessionState(realDoc());
  session.editParameter("assets", "A", 0, 0.1);
  const replacement = realDoc();
  replacement.assets[0].values = [0.2, 0.2, 0.2, 0.2, 0.2, 0.2];
  session.load(replacement);
  assert.equal(session.edits.length, 0);
  assert.deepEqual(session.current, replacement);
  assert.ok(session.replayMatches());
});

test("consecutive solves keep the previous result for movement", () => {
  const session = new SessionState(realDoc());
  const first = {
    type: "game_solution", value: -1, kind: "pure",
    saddle: ["A", "E"], rows: ["A"], cols: ["E"],
    row_strategy: [1], col_strategy: [1], trace: [],
  } as never;
  const second = { ...(first as object), value: 0.08 } as never;
  session.recordSolve(first);
  assert.equal(session.previousSolve, null);
  session.recordSolve(second);
  assert.equal(session.previousSolve, first);
  assert.equal(session.last.solve, second);
});
