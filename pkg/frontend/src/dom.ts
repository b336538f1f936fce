/** Thin DOM layer: pours view models into elements. No numeric logic. */

import { MatrixView, PolylineView, SolutionView } from "./views.js";

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, className?: string, text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

export function clear(node: HTMLElement): void {
  while (node.firstChild) {
    node.removeChild(node.firstChild);
  }
}

export function renderMatrix(target: HTMLElement, view: MatrixView): void {
  clear(target);
  const table = el("table", "matrix");
  const head = el("tr");
  head.appendChild(el("th"));
  for (const col of view.cols) {
    const th = el("th", view.struckCols.includes(col) ? "struck" : "", col);
    head.appendChild(th);
  }
  table.appendChild(head);
  view.rows.forEach((row, i) => {
    const tr = el("tr");
    tr.appendChild(el("th", view.struckRows.includes(row) ? "struck" : "", row));
    view.cells[i].forEach((cell) => {
      const td = el("td", "cell", cell.text);
      const tone = cell.positive ? "43, 138, 62" : "183, 58, 58";
      td.style.background = `rgba(${tone}, ${(0.12 + 0.5 * cell.heat).toFixed(3)})`;
      if (cell.struck) {
        td.classList.add("struck");
      }
      if (cell.saddle) {
        td.classList.add("saddle");
      }
      tr.appendChild(td);
    });
    table.appendChild(tr);
  });
  target.appendChild(table);
}

function renderBars(target: HTMLElement, title: string,
                    bars: SolutionView["rowBars"]): void {
  const box = el("div", "bars");
  box.appendChild(el("h3", "", title));
  for (const bar of bars) {
    const line = el("div", "bar-line");
    line.appendChild(el("span", "bar-label", bar.label));
    const track = el("div", "bar-track");
    const fill = el("div", "bar-fill" + (bar.active ? "" : " idle"));
    fill.style.width = `${bar.percent}%`;
    track.appendChild(fill);
    line.appendChild(track);
    line.appendChild(el("span", "bar-value", `${bar.percent}%`));
    box.appendChild(line);
  }
  target.appendChild(box);
}

export function renderSolution(target: HTMLElement, view: SolutionView): void {
  clear(target);
  const value = el("div", view.negative ? "value negative" : "value positive");
  value.appendChild(el("span", "value-number", view.valueText));
  value.appendChild(el("span", "value-kind",
                       view.saddleText
                         ? `${view.kindText} at ${view.saddleText}`
                         : view.kindText));
  if (view.boundsText) {
    value.appendChild(el("span", "value-bounds", `bounds ${view.boundsText}`));
  }
  target.appendChild(value);

  if (view.warning) {
    target.appendChild(el("div", "warning", view.warning));
  }
  if (view.movement) {
    target.appendChild(el("div", "movement", `movement: ${view.movement}`));
  }

  renderBars(target, "asset strategy", view.rowBars);
  renderBars(target, "threat strategy", view.colBars);

  if (view.traceLines.length) {
    const trace = el("div", "trace");
    trace.appendChild(el("h3", "", "dominance reduction"));
    for (const line of view.traceLines) {
      trace.appendChild(el("div", "trace-line", line));
    }
    target.appendChild(trace);
  }
}

export function renderPolyline(target: HTMLElement, view: PolylineView,
                               width = 420, height = 140): void {
  clear(target);
  const ns = "http://www.w3.org/2000/svg";
  const svg = document.createElementNS(ns, "svg");
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "plot");
  if (view.zeroY !== null) {
    const zero = document.createElementNS(ns, "line");
    zero.setAttribute("x1", "0");
    zero.setAttribute("x2", String(width));
    zero.setAttribute("y1", String(view.zeroY));
    zero.setAttribute("y2", String(view.zeroY));
    zero.setAttribute("class", "zero-line");
    svg.appendChild(zero);
  }
  const path = document.createElementNS(ns, "path");
  path.setAttribute("d", view.path);
  path.setAttribute("class", "value-line");
  svg.appendChild(path);
  for (const point of view.points) {
    const dot = document.createElementNS(ns, "circle");
    dot.setAttribute("cx", String(point.x));
    dot.setAttribute("cy", String(point.y));
    dot.setAttribute("r", "3");
    dot.setAttribute("class", point.value < 0 ? "dot negative" : "dot");
    const title = document.createElementNS(ns, "title");
    title.textContent = `${point.label}: ${point.value}`;
    dot.appendChild(title);
    svg.appendChild(dot);
  }
  target.appendChild(svg);
}

export function renderError(target: HTMLElement, message: string,
                            retry?: () => void): void {
  clear(target);
  const box = el("div", "error");
  box.appendChild(el("span", "", message));
  if (retry) {
    const button = el("button", "retry", "retry");
    button.addEventListener("click", retry);
    box.appendChild(button);
  }
  target.appendChild(box);
  target.hidden = false;
}
