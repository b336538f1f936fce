"""Exploration over the solver: sensitivity, interval search, timelines.

The interval search treats the midpoint realization as nominal.  Without
a budget the optimum is the all-upper realization (the solved value is
monotone in every entry); with a budget the search maximizes the value
over realizations whose total absolute deviation from nominal stays
within it, exhaustively on small matrices and by greedy coordinate
ascent above 3x3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    LabelError,
    RangeError,
    ScaleError,
    SizeError,
    StepError,
    TimelineError,
)
from .model import Scenario
from .payoff import (
    EntropyConfig,
    IntervalPayoffMatrix,
    PayoffMatrix,
    build_diff_matrix,
    build_entropy_matrix,
    time_weighted_matrix,
)
from .solver import Dominance, GameSolution, solve


@dataclass(frozen=True)
class WhatIfResult:
    """A chosen realization inside an interval matrix and its effect."""

    realization: PayoffMatrix
    achieved: float
    baseline: float
    delta: float
    deviations: tuple[tuple[float, ...], ...]


@dataclass(frozen=True)
class PeriodValue:
    period: int
    value: float
    kind: str
    saddle: tuple[str, str] | None


@dataclass(frozen=True)
class ValueSeries:
    """Game value per timeline period under one payoff rule."""

    rule: str
    records: tuple[PeriodValue, ...]


@dataclass(frozen=True)
class SolutionMovement:
    """Descriptive comparison of two solutions over compatible labels."""

    value_before: float
    value_after: float
    value_delta: float
    kind_before: str
    kind_after: str
    kind_changed: bool
    saddle_before: tuple[str, str] | None
    saddle_after: tuple[str, str] | None
    moved: bool
    description: str


def sensitivity(matrix: PayoffMatrix, row_label: str, col_label: str,
                delta: float, mode: Dominance = Dominance.WEAK,
                ) -> tuple[GameSolution, float]:
    """Re-solve with one entry perturbed; the original matrix is untouched."""
    baseline = solve(matrix, mode).value
    perturbed = matrix.with_entry(row_label, col_label,
                                  matrix.entry(row_label, col_label) + delta)
    solution = solve(perturbed, mode)
    return solution, solution.value - baseline


def _grid(lo: float, hi: float, step: float) -> list[float]:
    points = []
    k = 0
    while True:
        v = lo + k * step
        if v >= hi - 1e-12:
            break
        points.append(v)
        k += 1
    points.append(hi)
    return points


def _result(imatrix: IntervalPayoffMatrix, realization: PayoffMatrix,
            achieved: float, baseline: float) -> WhatIfResult:
    nominal = imatrix.midpoint()
    deviations = tuple(
        tuple(float(realization.entries[r, c] - nominal.entries[r, c])
              for c in range(len(imatrix.col_labels)))
        for r in range(len(imatrix.row_labels))
    )
    return WhatIfResult(realization, achieved, baseline,
                        achieved - baseline, deviations)


def optimize_within_intervals(imatrix: IntervalPayoffMatrix,
                              budget: float | None = None,
                              step: float = 0.01,
                              mode: Dominance = Dominance.WEAK,
                              method: str = "auto") -> WhatIfResult:
    """Search for the best payoff realization inside the interval matrix."""
    if method not in ("auto", "grid", "greedy"):
        raise RangeError(f"unknown search method {method!r}")
    if step <= 0.0:
        raise StepError(f"step must be positive, got {step}")
    if budget is not None and budget < 0.0:
        raise RangeError(f"budget must be nonnegative, got {budget}")

    nominal = imatrix.midpoint()
    baseline = solve(nominal, mode).value
    cells = [cell for row in imatrix.entries for cell in row]
    widest = max(cell.width for cell in cells)

    if widest == 0.0 or (budget is not None and budget == 0.0):
        return _result(imatrix, nominal, baseline, baseline)
    if step > widest:
        raise StepError(f"step {step} exceeds the widest interval ({widest})")

    upper_room = sum(cell.hi - cell.midpoint for cell in cells)
    if budget is None or budget >= upper_room:
        # unconstrained: monotonicity makes the all-upper realization optimal
        upper = imatrix.upper()
        return _result(imatrix, upper, solve(upper, mode).value, baseline)

    n_rows, n_cols = imatrix.shape
    if method == "auto":
        method = "grid" if n_rows <= 3 and n_cols <= 3 else "greedy"
    if method == "grid" and (n_rows > 3 or n_cols > 3):
        raise SizeError(f"grid search is limited to 3x3 matrices, got {imatrix.shape}")

    mids = [cell.midpoint for cell in cells]
    if method == "grid":
        values = _grid_search(imatrix, cells, mids, budget, step, mode, baseline)
    else:
        values = _greedy_search(imatrix, cells, mids, budget, step, mode, baseline)
    realization = PayoffMatrix(
        imatrix.row_labels, imatrix.col_labels,
        [values[r * n_cols:(r + 1) * n_cols] for r in range(n_rows)],
    )
    return _result(imatrix, realization, solve(realization, mode).value, baseline)


def _grid_search(imatrix, cells, mids, budget, step, mode, baseline):
    grids = [_grid(cell.lo, cell.hi, step) for cell in cells]
    # cheapest reachable deviation per remaining entry, for pruning
    min_dev = [min(abs(g - m) for g in grid) for grid, m in zip(grids, mids)]
    suffix_min = [0.0] * (len(cells) + 1)
    for i in range(len(cells) - 1, -1, -1):
        suffix_min[i] = suffix_min[i + 1] + min_dev[i]

    n_cols = len(imatrix.col_labels)
    best_values = list(mids)
    best_score = baseline
    chosen: list[float] = []

    def descend(index: int, spent: float):
        nonlocal best_values, best_score
        if spent + suffix_min[index] > budget + 1e-9:
            return
        if index == len(cells):
            matrix = PayoffMatrix(
                imatrix.row_labels, imatrix.col_labels,
                [chosen[r * n_cols:(r + 1) * n_cols]
                 for r in range(len(imatrix.row_labels))],
            )
            score = solve(matrix, mode).value
            if score > best_score + 1e-12:
                best_score = score
                best_values = list(chosen)
            return
        for g in grids[index]:
            cost = abs(g - mids[index])
            if spent + cost > budget + 1e-9:
                continue
            chosen.append(g)
            descend(index + 1, spent + cost)
            chosen.pop()

    descend(0, 0.0)
    return best_values


def _greedy_search(imatrix, cells, mids, budget, step, mode, baseline):
    n_cols = len(imatrix.col_labels)
    current = list(mids)
    current_score = baseline

    def score_of(values):
        matrix = PayoffMatrix(
            imatrix.row_labels, imatrix.col_labels,
            [values[r * n_cols:(r + 1) * n_cols]
             for r in range(len(imatrix.row_labels))],
        )
        return solve(matrix, mode).value

    while True:
        spent = sum(abs(v - m) for v, m in zip(current, mids))
        best_move = None
        best_gain = 1e-12
        for i, cell in enumerate(cells):
            candidate = min(cell.hi, current[i] + step)
            if candidate <= current[i]:
                continue
            if spent - abs(current[i] - mids[i]) + abs(candidate - mids[i]) > budget + 1e-9:
                continue
            trial = list(current)
            trial[i] = candidate
            gain = score_of(trial) - current_score
            if gain > best_gain:
                best_gain = gain
                best_move = (i, candidate)
        if best_move is None:
            return current
        current[best_move[0]] = best_move[1]
        current_score += best_gain


def timeline_values(scenario: Scenario, rule: str = "diff",
                    config: EntropyConfig | None = None,
                    mode: Dominance = Dominance.WEAK) -> ValueSeries:
    """Solve the time-weighted game for every period of the timeline."""
    if scenario.timeline is None:
        raise TimelineError("the scenario has no threat timeline")
    if rule == "diff":
        base = build_diff_matrix(scenario)
    elif rule == "entropy":
        base = build_entropy_matrix(scenario, config)
    else:
        raise ScaleError(f"timeline analysis supports diff or entropy, got {rule!r}")

    records = []
    for period in range(scenario.timeline.periods):
        weighted = time_weighted_matrix(base, scenario.timeline, period)
        solution = solve(weighted, mode)
        records.append(PeriodValue(period, solution.value, solution.kind,
                                   solution.saddle))
    return ValueSeries(rule, tuple(records))


def _compatible(before: tuple[str, ...], after: tuple[str, ...]) -> bool:
    b, a = set(before), set(after)
    return b <= a or a <= b


def compare_solutions(before: GameSolution, after: GameSolution) -> SolutionMovement:
    """Report value, kind, and saddle movement between two solutions."""
    if not (_compatible(before.row_labels, after.row_labels)
            and _compatible(before.col_labels, after.col_labels)):
        raise LabelError(
            "solutions cover different label universes: "
            f"{before.row_labels} x {before.col_labels} vs "
            f"{after.row_labels} x {after.col_labels}"
        )
    moved = (before.saddle is not None and after.saddle is not None
             and before.saddle != after.saddle)
    kind_changed = before.kind != after.kind
    parts = [f"value {before.value:g} -> {after.value:g}"]
    if kind_changed:
        parts.append(f"kind {before.kind} -> {after.kind}")
    if moved:
        parts.append(
            f"saddle ({before.saddle[0]},{before.saddle[1]}) -> "
            f"({after.saddle[0]},{after.saddle[1]})"
        )
    elif before.saddle is not None and after.saddle == before.saddle:
        parts.append(
            f"saddle stays at ({before.saddle[0]},{before.saddle[1]})"
        )
    return SolutionMovement(
        value_before=before.value,
        value_after=after.value,
        value_delta=after.value - before.value,
        kind_before=before.kind,
        kind_after=after.kind,
        kind_changed=kind_changed,
        saddle_before=before.saddle,
        saddle_after=after.saddle,
        moved=moved,
        description="; ".join(parts),
    )
