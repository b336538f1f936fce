/**
 * Pure helpers over scenario documents: scale detection, edit
 * validation, immutable edits, and wire serialization.
 *
 * Serialization matters: the service distinguishes binary from real
 * parameters by JSON number shape (1 vs 1.0), and JavaScript erases
 * that distinction, so real-scale documents are emitted by a custom
 * stringifier that keeps integral values decimal.
 */

import { ParameterValue, ScenarioDoc, Scale, Side, SpanValue } from "./types.js";

export function isSpan(value: ParameterValue): value is SpanValue {
  return Array.isArray(value);
}

function valueScale(value: ParameterValue): Scale {
  if (isSpan(value)) {
    return "span";
  }
  return Number.isInteger(value) ? "binary" : "real";
}

/** The shared scale of a document's value-bearing profiles, if any. */
export function detectScale(doc: ScenarioDoc): Scale | null {
  const scales = new Set<Scale>();
  for (const profile of [...doc.assets, ...doc.threats]) {
    if (profile.values === null || profile.values === undefined) {
      continue;
    }
    for (const value of profile.values) {
      scales.add(valueScale(value));
    }
  }
  if (scales.size === 0) {
    return null;
  }
  if (scales.has("span")) {
    return "span";
  }
  // any fractional value makes the whole document real-scaled
  return scales.has("real") ? "real" : "binary";
}

/** Null when the edit fits the scale, otherwise a rejection message. */
export function validateEdit(scale: Scale, value: ParameterValue): string | null {
  if (scale === "span") {
    if (!isSpan(value)) {
      return "span parameters take a [low, high] pair";
    }
    const [lo, hi] = value;
    if (!(lo >= -1 && hi <= 1 && lo <= hi)) {
      return `span [${lo}, ${hi}] must be ordered and inside [-1, 1]`;
    }
    return null;
  }
  if (isSpan(value)) {
    return `${scale} parameters take a single number`;
  }
  if (scale === "binary") {
    if (value !== 0 && value !== 1) {
      return `binary parameters are 0 or 1, got ${value}`;
    }
    return null;
  }
  if (!(value >= -1 && value <= 1)) {
    return `real parameters live in [-1, 1], got ${value}`;
  }
  return null;
}

export function getValue(
  doc: ScenarioDoc, side: Side, label: string, index: number,
): ParameterValue {
  const profile = doc[side].find((p) => p.label === label);
  if (!profile || profile.values === null || profile.values === undefined) {
    throw new Error(`no editable values for ${side} ${label}`);
  }
  if (index < 0 || index >= profile.values.length) {
    throw new Error(`parameter index ${index} out of range for ${label}`);
  }
  return profile.values[index];
}

/** A structurally-shared copy of the document with one value replaced. */
export function applyEdit(
  doc: ScenarioDoc, side: Side, label: string, index: number,
  value: ParameterValue,
): ScenarioDoc {
  getValue(doc, side, label, index); // bounds check
  return {
    ...doc,
    [side]: doc[side].map((profile) =>
      profile.label === label && profile.values
        ? {
            ...profile,
            values: profile.values.map((v, i) => (i === index ? value : v)),
          }
        : profile,
    ),
  };
}

function emitNumber(value: number, forceDecimal: boolean): string {
  const text = JSON.stringify(value);
  if (forceDecimal && Number.isInteger(value) && !text.includes("e")) {
    return `${text}.0`;
  }
  return text;
}

function emitValue(value: ParameterValue, realScale: boolean): string {
  if (isSpan(value)) {
    return `[${value.map((v) => JSON.stringify(v)).join(", ")}]`;
  }
  return emitNumber(value, realScale);
}

/**
 * Serialize a scenario document for the service, forcing decimal
 * notation on real-scale parameter values (so an edit to exactly 1
 * stays a real parameter on the wire).
 */
export function serializeDocument(doc: ScenarioDoc, scale: Scale | null): string {
  const real = scale === "real";
  const parts: string[] = [];
  parts.push(`"scheme": ${JSON.stringify(doc.scheme)}`);
  for (const side of ["assets", "threats"] as const) {
    const profiles = doc[side].map((profile) => {
      const values =
        profile.values === null || profile.values === undefined
          ? "null"
          : `[${profile.values.map((v) => emitValue(v, real)).join(", ")}]`;
      return `{"label": ${JSON.stringify(profile.label)}, "values": ${values}}`;
    });
    parts.push(`"${side}": [${profiles.join(", ")}]`);
  }
  if (doc.timeline) {
    parts.push(`"timeline": ${JSON.stringify(doc.timeline)}`);
  }
  if (doc.overrides) {
    parts.push(`"overrides": ${JSON.stringify(doc.overrides)}`);
  }
  if (doc.rule) {
    parts.push(`"rule": ${JSON.stringify(doc.rule)}`);
  }
  if (doc.entropy) {
    parts.push(`"entropy": ${JSON.stringify(doc.entropy)}`);
  }
  return `{${parts.join(", ")}}`;
}
