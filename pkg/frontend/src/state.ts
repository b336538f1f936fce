/**
 * Session state: the working document, the edit history, and the last
 * result per command.
 *
 * Invariant: replaying the recorded edits over the initial document
 * reproduces the current document exactly (checked by `replayMatches`).
 */

import { applyEdit, detectScale, getValue, validateEdit } from "./document.js";
import {
  ParameterValue,
  ScenarioDoc,
  SensitivityDoc,
  SeriesDoc,
  Side,
  SolutionDoc,
  WhatIfDoc,
} from "./types.js";

export interface Edit {
  side: Side;
  label: string;
  index: number;
  before: ParameterValue;
  after: ParameterValue;
}

export type EditOutcome = { ok: true } | { ok: false; error: string };

export interface LastResults {
  solve?: SolutionDoc;
  whatif?: SensitivityDoc | WhatIfDoc;
  timeline?: SeriesDoc;
}

function clone<T>(value: T): T {
  return JSON.parse(JSON.stringify(value)) as T;
}

export class SessionState {
  initial: ScenarioDoc;
  current: ScenarioDoc;
  edits: Edit[] = [];
  dirty = false;
  last: LastResults = {};
  previousSolve: SolutionDoc | null = null;

  constructor(doc: ScenarioDoc) {
    this.initial = clone(doc);
    this.current = clone(doc);
  }

  /** Replace the whole document (a fresh upload); history restarts. */
  load(doc: ScenarioDoc): void {
    this.initial = clone(doc);
    this.current = clone(doc);
    this.edits = [];
    this.dirty = true;
  }

  get scale() {
    return detectScale(this.current);
  }

  editParameter(
    side: Side, label: string, index: number, value: ParameterValue,
  ): EditOutcome {
    const scale = this.scale;
    if (scale === null) {
      return { ok: false, error: "this document has no editable values" };
    }
    const error = validateEdit(scale, value);
    if (error !== null) {
      return { ok: false, error };
    }
    let before: ParameterValue;
    try {
      before = getValue(this.current, side, label, index);
    } catch (exc) {
      return { ok: false, error: (exc as Error).message };
    }
    this.current = applyEdit(this.current, side, label, index, value);
    this.edits.push({ side, label, index, before, after: value });
    this.dirty = true;
    return { ok: true };
  }

  undo(): boolean {
    const edit = this.edits.pop();
    if (!edit) {
      return false;
    }
    this.current = applyEdit(
      this.current, edit.side, edit.label, edit.index, edit.before,
    );
    this.dirty = true;
    return true;
  }

  /** Replay the history over the initial document and compare. */
  replayMatches(): boolean {
    let doc = clone(this.initial);
    for (const edit of this.edits) {
      doc = applyEdit(doc, edit.side, edit.label, edit.index, edit.after);
    }
    return JSON.stringify(doc) === JSON.stringify(this.current);
  }

  recordSolve(result: SolutionDoc): void {
    this.previousSolve = this.last.solve ?? null;
    this.last.solve = result;
    this.dirty = false;
  }

  recordWhatIf(result: SensitivityDoc | WhatIfDoc): void {
    this.last.whatif = result;
  }

  recordTimeline(result: SeriesDoc): void {
    this.last.timeline = result;
  }
}
