import assert from "node:assert/strict";
import { test } from "node:test";

import {
  applyEdit,
  detectScale,
  serializeDocument,
  validateEdit,
} from "../src/document.js";
import { ScenarioDoc } from "../src/types.js";

const binaryDoc: ScenarioDoc = {
  scheme: { names: ["p1", "p2"] },
  assets: [{ label: "A", values: [1, 0] }],
  threats: [{ label: "C", values: [0, 1] }],
};

const realDoc: ScenarioDoc = {
  scheme: { names: ["p1", "p2"] },
  assets: [{ label: "A", values: [0.5, 0.25] }],
  threats: [{ label: "C", values: [0.75, 0.5] }],
};

test("scale detection follows the value shapes", () => {
  assert.equal(detectScale(binaryDoc), "binary");
  assert.equal(detectScale(realDoc), "real");
  assert.equal(detectScale({
    ...binaryDoc,
    assets: [{ label: "A", values: [[0.1, 0.2], [0.3, 0.4]] }],
    threats: [{ label: "C", values: [[0.0, 0.1], [0.2, 0.3]] }],
  }), "span");
  assert.equal(detectScale({
    ...binaryDoc,
    assets: [{ label: "A", values: null }],
    threats: [{ label: "C", values: null }],
  }), null);
});

test("binary edits only accept 0 and 1", () => {
  assert.equal(validateEdit("binary", 1), null);
  assert.equal(validateEdit("binary", 0), null);
  assert.match(validateEdit("binary", 0.5) ?? "", /0 or 1/);
});

test("real edits stay inside [-1, 1]", () => {
  assert.equal(validateEdit("real", 0.84), null);
  assert.equal(validateEdit("real", -1), null);
  assert.match(validateEdit("real", 1.5) ?? "", /\[-1, 1\]/);
  assert.match(validateEdit("real", [0.1, 0.2]) ?? "", /single number/);
});

test("span edits take ordered in-range pairs", () => {
  assert.equal(validateEdit("span", [0.1, 0.4]), null);
  assert.notEqual(validateEdit("span", [0.4, 0.1]), null);
  assert.notEqual(validateEdit("span", 0.3), null);
});

test("applyEdit replaces one value immutably", () => {
  const edited = applyEdit(realDoc, "assets", "A", 1, 0.9);
  assert.equal(edited.assets[0].values?.[1], 0.9);
  assert.equal(realDoc.assets[0].values?.[1], 0.25);
  assert.throws(() => applyEdit(realDoc, "assets", "A", 9, 0.9));
  assert.throws(() => applyEdit(realDoc, "assets", "Z", 0, 0.9));
});

test("real-scale serialization keeps integral values decimal", () => {
  const edited = applyEdit(realDoc, "assets", "A", 0, 1);
  const wire = serializeDocument(edited, "real");
  assert.match(wire, /"values": \[1\.0, 0\.25\]/);
  const parsed = JSON.parse(wire) as ScenarioDoc;
  assert.equal(parsed.assets[0].values?.[0], 1);
});

test("binary serialization keeps integers bare", () => {
  const wire = serializeDocument(binaryDoc, "binary");
  assert.match(wire, /"values": \[1, 0\]/);
  assert.deepEqual(JSON.parse(wire), binaryDoc);
});

test("serialization carries optional sections through", () => {
  const doc: ScenarioDoc = {
    ...binaryDoc,
    timeline: { periods: 2, pp: { C: [0.5, 0.6] } },
    rule: "diff",
  };
  const parsed = JSON.parse(serializeDocument(doc, "binary")) as ScenarioDoc;
  assert.deepEqual(parsed.timeline, doc.timeline);
  assert.equal(parsed.rule, "diff");
});
