/** Console wiring: inputs, command buttons, and the live what-if loop. */

import { ApiClient, ApiError } from "./api.js";
import { serializeDocument } from "./document.js";
import {
  clear,
  el,
  renderError,
  renderMatrix,
  renderPolyline,
  renderSolution,
} from "./dom.js";
import { Debouncer } from "./slider.js";
import { SessionState } from "./state.js";
import { MatrixDoc, Rule, ScenarioDoc, SensitivityDoc } from "./types.js";
import {
  buildMatrixView,
  buildSolutionView,
  buildTimelineView,
  buildWhatIfCurve,
  formatValue,
} from "./views.js";

function need<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

const baseUrlInput = need<HTMLInputElement>("base-url");
const scenarioIdInput = need<HTMLInputElement>("scenario-id");
const documentArea = need<HTMLTextAreaElement>("document-input");
const ruleSelect = need<HTMLSelectElement>("rule-select");
const dominanceSelect = need<HTMLSelectElement>("dominance-select");
const statusLine = need<HTMLElement>("status-line");
const errorBox = need<HTMLElement>("error-box");
const editorBox = need<HTMLElement>("editor");
const matrixBox = need<HTMLElement>("matrix-panel");
const solutionBox = need<HTMLElement>("solution-panel");
const timelineBox = need<HTMLElement>("timeline-panel");
const whatifBox = need<HTMLElement>("whatif-panel");
const whatifEntrySelect = need<HTMLSelectElement>("whatif-entry");
const whatifSlider = need<HTMLInputElement>("whatif-delta");
const whatifReadout = need<HTMLElement>("whatif-readout");

let session: SessionState | null = null;
let client = new ApiClient(baseUrlInput.value || "http://localhost:8750");
const slider = new Debouncer(200);
const curveSamples: { delta: number; value: number }[] = [];

baseUrlInput.addEventListener("change", () => {
  client = new ApiClient(baseUrlInput.value.replace(/\/$/, ""));
});

function status(text: string): void {
  statusLine.textContent = text;
  errorBox.hidden = true;
}

function fail(exc: unknown, retry?: () => void): void {
  const message = exc instanceof ApiError
    ? `${exc.kind}: ${exc.detail}`
    : String(exc);
  renderError(errorBox, message, retry);
}

function currentDocument(): ScenarioDoc | null {
  return session ? session.current : null;
}

function renderEditor(): void {
  clear(editorBox);
  const doc = currentDocument();
  if (!doc) {
    return;
  }
  for (const side of ["assets", "threats"] as const) {
    for (const profile of doc[side]) {
      if (!profile.values) {
        continue;
      }
      const line = el("div", "edit-line");
      line.appendChild(el("span", "edit-label", profile.label));
      profile.values.forEach((value, index) => {
        const input = el("input", "edit-value") as HTMLInputElement;
        input.value = JSON.stringify(value);
        input.title = doc.scheme.names[index] ?? `p${index + 1}`;
        input.addEventListener("change", () => {
          if (!session) {
            return;
          }
          let parsed: unknown;
          try {
            parsed = JSON.parse(input.value);
          } catch {
            input.classList.add("bad");
            input.setCustomValidity("not a number or [low, high] pair");
            return;
          }
          const outcome = session.editParameter(
            side, profile.label, index,
            parsed as number | [number, number]);
          if (!outcome.ok) {
            input.classList.add("bad");
            input.title = outcome.error;
            status(outcome.error);
            input.value = JSON.stringify(
              session.current[side]
                .find((p) => p.label === profile.label)!.values![index]);
            return;
          }
          input.classList.remove("bad");
          status(`edited ${profile.label} ${input.title}; re-solve to update`);
        });
        line.appendChild(input);
      });
      editorBox.appendChild(line);
    }
  }
  const undo = el("button", "", "undo last edit");
  undo.addEventListener("click", () => {
    if (session && session.undo()) {
      renderEditor();
      status("edit undone");
    }
  });
  editorBox.appendChild(undo);
}

function refreshWhatIfEntries(matrix: MatrixDoc): void {
  clear(whatifEntrySelect);
  for (const row of matrix.rows) {
    for (const col of matrix.cols) {
      const option = el("option", "", `${row},${col}`) as HTMLOptionElement;
      option.value = `${row},${col}`;
      whatifEntrySelect.appendChild(option);
    }
  }
}

async function upload(): Promise<void> {
  const id = scenarioIdInput.value.trim();
  try {
    const doc = JSON.parse(documentArea.value) as ScenarioDoc;
    if (!session) {
      session = new SessionState(doc);
    } else {
      session.load(doc);
    }
    await client.putScenario(id, serializeDocument(doc, session.scale));
    status(`scenario ${id} stored`);
    renderEditor();
    if (doc.rule) {
      ruleSelect.value = doc.rule;
    }
  } catch (exc) {
    fail(exc, upload);
  }
}

async function push(): Promise<void> {
  if (!session) {
    return;
  }
  const id = scenarioIdInput.value.trim();
  await client.putScenario(
    id, serializeDocument(session.current, session.scale));
}

async function solveNow(): Promise<void> {
  if (!session) {
    return;
  }
  const id = scenarioIdInput.value.trim();
  try {
    await push();
    const result = await client.solve(id, {
      rule: ruleSelect.value as Rule,
      dominance: dominanceSelect.value as "weak" | "strict",
    });
    const view = buildSolutionView(result, session.last.solve);
    session.recordSolve(result);
    renderSolution(solutionBox, view);
    status(view.negative
      ? "solved: the game is against you"
      : "solved: the game favors you");
    curveSamples.length = 0;
    renderWhatIfCurve();
  } catch (exc) {
    fail(exc, solveNow);
  }
}

async function loadTimeline(): Promise<void> {
  if (!session) {
    return;
  }
  const id = scenarioIdInput.value.trim();
  try {
    await push();
    const series = await client.timeline(
      id, ruleSelect.value === "interval" ? "diff" : ruleSelect.value as Rule);
    session.recordTimeline(series);
    renderPolyline(timelineBox, buildTimelineView(series));
    status(`timeline: ${series.periods.length} periods`);
  } catch (exc) {
    fail(exc, loadTimeline);
  }
}

function renderWhatIfCurve(): void {
  if (curveSamples.length === 0) {
    clear(whatifBox);
    return;
  }
  renderPolyline(whatifBox, buildWhatIfCurve(curveSamples));
}

function scheduleWhatIf(): void {
  slider.schedule(() => {
    void (async () => {
      if (!session) {
        return;
      }
      const id = scenarioIdInput.value.trim();
      const [row, col] = whatifEntrySelect.value.split(",");
      const delta = Number(whatifSlider.value);
      try {
        const result = await client.whatif(id, {
          entry: [row, col], delta,
          rule: ruleSelect.value as Rule,
          dominance: dominanceSelect.value,
        }) as SensitivityDoc;
        session.recordWhatIf(result);
        whatifReadout.textContent =
          `Δ ${formatValue(result.delta)} ⇒ value ` +
          `${formatValue(result.new_value)} ` +
          `(change ${formatValue(result.value_change)})`;
        curveSamples.push({ delta: result.delta, value: result.new_value });
        renderWhatIfCurve();
      } catch (exc) {
        fail(exc);
      }
    })();
  });
}

async function buildMatrix(): Promise<void> {
  if (!session) {
    return;
  }
  try {
    const id = scenarioIdInput.value.trim();
    const solved = session.last.solve;
    const matrix = await client.build(id, ruleSelect.value as Rule);
    renderMatrix(matrixBox, buildMatrixView(
      matrix, solved?.trace ?? [], solved?.saddle ?? null));
    if (matrix.type === "payoff_matrix") {
      refreshWhatIfEntries(matrix);
    }
  } catch (exc) {
    fail(exc);
  }
}

need<HTMLButtonElement>("upload-button").addEventListener("click", () => {
  void upload();
});
need<HTMLButtonElement>("solve-button").addEventListener("click", () => {
  void solveNow().then(buildMatrix);
});
need<HTMLButtonElement>("timeline-button").addEventListener("click", () => {
  void loadTimeline();
});
whatifSlider.addEventListener("input", scheduleWhatIf);
whatifEntrySelect.addEventListener("change", () => {
  curveSamples.length = 0;
  renderWhatIfCurve();
  scheduleWhatIf();
});

status("paste a scenario document and upload it to begin");
