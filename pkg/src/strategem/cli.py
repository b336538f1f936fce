"""Command-line workflow: build, solve, timeline, whatif, serve.

Exit codes: 0 on success (and a nonnegative game value for `solve`),
2 on unreadable or invalid input, 3 when `solve` finds a negative game
value -- the machine-readable signal to rework or abandon the strategy.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .docio import (
    ScenarioDocument,
    dump_document,
    interval_matrix_to_doc,
    load_scenario_document,
    matrix_to_doc,
    sensitivity_to_doc,
    series_to_doc,
    solution_to_doc,
    whatif_to_doc,
)
from .errors import DocumentError, ScaleError, StrategemError
from .payoff import IntervalPayoffMatrix, PayoffMatrix, build_matrix, time_weighted_matrix
from .solver import Dominance, GameSolution, interval_game_bounds, solve
from .whatif import ValueSeries, WhatIfResult, optimize_within_intervals, sensitivity, timeline_values

DEFAULT_STORE = "scenario-store"


# ---------------------------------------------------------------------------
# text rendering


def render_matrix_text(matrix: PayoffMatrix) -> str:
    width = max(8, *(len(l) + 2 for l in matrix.col_labels))
    head = " " * 6 + "".join(f"{l:>{width}}" for l in matrix.col_labels)
    lines = [head]
    for label, row in zip(matrix.row_labels, matrix.entries):
        lines.append(f"{label:<6}" + "".join(f"{v:>{width}.4f}" for v in row))
    return "\n".join(lines)


def render_interval_matrix_text(matrix: IntervalPayoffMatrix) -> str:
    cells = [[f"[{c.lo:.3f}, {c.hi:.3f}]" for c in row] for row in matrix.entries]
    width = max(len(s) + 2 for row in cells for s in row)
    head = " " * 6 + "".join(f"{l:>{width}}" for l in matrix.col_labels)
    lines = [head]
    for label, row in zip(matrix.row_labels, cells):
        lines.append(f"{label:<6}" + "".join(f"{s:>{width}}" for s in row))
    return "\n".join(lines)


def render_solution_text(solution: GameSolution,
                         bounds: tuple[float, float] | None = None) -> str:
    lines = [f"value: {solution.value:.6g}"]
    if solution.is_pure:
        lines.append(f"kind: pure saddle at ({solution.saddle[0]}, {solution.saddle[1]})")
    else:
        lines.append("kind: mixed strategies")
    if bounds is not None:
        lines.append(f"value bounds: [{bounds[0]:.6g}, {bounds[1]:.6g}]")
    rows = ", ".join(
        f"{l}={p:.4f}" for l, p in zip(solution.row_labels, solution.row_strategy)
    )
    cols = ", ".join(
        f"{l}={p:.4f}" for l, p in zip(solution.col_labels, solution.col_strategy)
    )
    lines.append(f"asset strategy:  {rows}")
    lines.append(f"threat strategy: {cols}")
    if solution.trace:
        lines.append("reduction:")
        lines.extend(f"  - {event.describe()}" for event in solution.trace)
    else:
        lines.append("reduction: none")
    if solution.value < 0:
        lines.append("verdict: unfavorable (negative value) -- rework or abandon")
    else:
        lines.append("verdict: favorable (nonnegative value)")
    return "\n".join(lines)


def render_series_text(series: ValueSeries) -> str:
    lines = [f"{'period':>6}  {'value':>12}  {'kind':<6} saddle"]
    for r in series.records:
        cell = f"({r.saddle[0]},{r.saddle[1]})" if r.saddle else "-"
        lines.append(f"{r.period:>6}  {r.value:>12.6f}  {r.kind:<6} {cell}")
    return "\n".join(lines)


def render_whatif_text(result: WhatIfResult) -> str:
    lines = [
        f"baseline value: {result.baseline:.6g}",
        f"achieved value: {result.achieved:.6g}",
        f"improvement:    {result.delta:.6g}",
        "chosen realization:",
        render_matrix_text(result.realization),
    ]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# command helpers


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _load(args) -> ScenarioDocument:
    return load_scenario_document(args.scenario)


def _rule_of(args, doc: ScenarioDocument) -> str:
    return args.rule or doc.rule or "diff"


def _mode_of(args) -> Dominance:
    return Dominance(getattr(args, "dominance", None) or "weak")


def _base_matrix(args, doc: ScenarioDocument, rule: str):
    matrix = build_matrix(doc.scenario, rule, doc.entropy)
    period = getattr(args, "period", None)
    if period is not None:
        if isinstance(matrix, IntervalPayoffMatrix):
            raise ScaleError("time weighting applies to real payoff matrices")
        if doc.scenario.timeline is None:
            raise DocumentError("scenario has no timeline to take a period from")
        matrix = time_weighted_matrix(matrix, doc.scenario.timeline, period)
    return matrix


def cmd_build(args) -> int:
    doc = _load(args)
    rule = _rule_of(args, doc)
    matrix = _base_matrix(args, doc, rule)
    if isinstance(matrix, IntervalPayoffMatrix):
        if args.format == "machine":
            _emit(args, dump_document(interval_matrix_to_doc(matrix)))
        else:
            _emit(args, render_interval_matrix_text(matrix))
    else:
        if args.format == "machine":
            _emit(args, dump_document(matrix_to_doc(matrix)))
        else:
            _emit(args, render_matrix_text(matrix))
    return 0


def cmd_solve(args) -> int:
    doc = _load(args)
    rule = _rule_of(args, doc)
    mode = _mode_of(args)
    matrix = _base_matrix(args, doc, rule)
    bounds = None
    if isinstance(matrix, IntervalPayoffMatrix):
        # interval games report the midpoint solution plus value bounds
        bounds = interval_game_bounds(matrix, mode)
        matrix = matrix.midpoint()
    solution = solve(matrix, mode)
    if args.format == "machine":
        payload = solution_to_doc(solution)
        if bounds is not None:
            payload["value_bounds"] = list(bounds)
        _emit(args, dump_document(payload))
    else:
        _emit(args, render_solution_text(solution, bounds))
    return 0 if solution.value >= 0 else 3


def cmd_timeline(args) -> int:
    doc = _load(args)
    rule = _rule_of(args, doc)
    if rule == "interval":
        raise ScaleError("timeline analysis supports diff or entropy rules")
    series = timeline_values(doc.scenario, rule, doc.entropy, _mode_of(args))
    if args.format == "machine":
        _emit(args, dump_document(series_to_doc(series)))
    else:
        _emit(args, render_series_text(series))
    return 0


def cmd_whatif(args) -> int:
    doc = _load(args)
    rule = _rule_of(args, doc)
    mode = _mode_of(args)

    if args.entry:
        if args.delta is None:
            raise DocumentError("--entry requires --delta")
        try:
            row_label, col_label = (s.strip() for s in args.entry.split(",", 1))
        except ValueError:
            raise DocumentError(f"--entry must look like ROW,COL: {args.entry!r}")
        matrix = build_matrix(doc.scenario, rule, doc.entropy)
        if isinstance(matrix, IntervalPayoffMatrix):
            matrix = matrix.midpoint()
        baseline = solve(matrix, mode).value
        solution, change = sensitivity(matrix, row_label, col_label, args.delta, mode)
        if args.format == "machine":
            _emit(args, dump_document(sensitivity_to_doc(
                (row_label, col_label), args.delta, baseline, solution, change)))
        else:
            _emit(args, "\n".join([
                f"entry ({row_label}, {col_label}) perturbed by {args.delta:g}",
                f"baseline value: {baseline:.6g}",
                f"new value:      {solution.value:.6g}",
                f"value change:   {change:.6g}",
            ]))
        return 0

    matrix = build_matrix(doc.scenario, "interval", doc.entropy)
    result = optimize_within_intervals(matrix, budget=args.budget,
                                       step=args.step, mode=mode)
    if args.format == "machine":
        _emit(args, dump_document(whatif_to_doc(result)))
    else:
        _emit(args, render_whatif_text(result))
    return 0


def cmd_serve(args) -> int:
    from .service import serve

    store = os.environ.get("STRATEGEM_STORE") or args.store or DEFAULT_STORE
    serve(args.port, store)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_common(parser: argparse.ArgumentParser, dominance: bool = True) -> None:
    parser.add_argument("scenario", help="path to a scenario document (JSON)")
    parser.add_argument("--rule", choices=["diff", "entropy", "interval"],
                        help="payoff rule (default: the document's, then diff)")
    if dominance:
        parser.add_argument("--dominance", choices=["weak", "strict"],
                            help="dominance mode for reduction (default weak)")
    parser.add_argument("--format", choices=["text", "machine"], default="text",
                        help="human-readable text or JSON output")
    parser.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strategem",
        description="Model a project as a zero-sum game between assets and "
                    "threats: build payoff matrices, solve them, and explore "
                    "what-if variations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build the payoff matrix for a scenario")
    _add_common(p, dominance=False)
    p.add_argument("--period", type=int,
                   help="weight columns by this timeline period before output")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("solve", help="solve the scenario's game")
    _add_common(p)
    p.add_argument("--period", type=int,
                   help="weight columns by this timeline period before solving")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("timeline", help="game value per timeline period")
    _add_common(p)
    p.set_defaults(func=cmd_timeline)

    p = sub.add_parser("whatif", help="entry sensitivity or interval search")
    _add_common(p)
    p.add_argument("--entry", metavar="ROW,COL",
                   help="perturb this entry (with --delta)")
    p.add_argument("--delta", type=float, help="perturbation size for --entry")
    p.add_argument("--budget", type=float,
                   help="total absolute deviation allowed from the nominal matrix")
    p.add_argument("--step", type=float, default=0.01,
                   help="grid step for the interval search (default 0.01)")
    p.set_defaults(func=cmd_whatif)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=8750)
    p.add_argument("--store", help=f"scenario store directory "
                                   f"(default {DEFAULT_STORE}; "
                                   f"STRATEGEM_STORE overrides)")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        scenario = getattr(args, "scenario", "<input>")
        print(f"{scenario}:{exc.lineno}:{exc.colno}: {exc.msg}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"{exc.filename}: not found", file=sys.stderr)
        return 2
    except StrategemError as exc:
        scenario = getattr(args, "scenario", None)
        prefix = f"{scenario}: " if scenario else ""
        print(f"{prefix}{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
