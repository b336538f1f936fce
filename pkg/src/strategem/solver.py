"""Zero-sum matrix game solver.

The pipeline reduces the matrix by iterated dominance elimination, then
solves the remnant: a 2x2 goes to the oddments method, anything else to
a saddle-point check and, failing that, to the minimax linear program
run on the internal dense simplex.  Strategies are re-expanded to the
original labels with zeros on eliminated lines, and every elimination is
recorded in an auditable trace.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateError, SolverError
from .payoff import IntervalPayoffMatrix, PayoffMatrix
from .simplex import simplex_maximize


class Dominance(str, Enum):
    WEAK = "weak"
    STRICT = "strict"


ROW = "row"
COLUMN = "column"


@dataclass(frozen=True)
class Elimination:
    """One dominance elimination: `label` was dominated by `by`."""

    line: str  # ROW or COLUMN
    label: str
    by: str
    strict: bool

    def describe(self) -> str:
        kind = "strictly" if self.strict else "weakly"
        return f"{self.line} {self.label} eliminated ({kind} dominated by {self.by})"


ReductionTrace = tuple[Elimination, ...]


@dataclass(frozen=True)
class GameSolution:
    """Game value, optimal strategies, and how the matrix was reduced."""

    value: float
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    row_strategy: tuple[float, ...]
    col_strategy: tuple[float, ...]
    kind: str  # "pure" or "mixed"
    saddle: tuple[str, str] | None = None
    trace: ReductionTrace = ()

    def __post_init__(self):
        for name, labels, probs in (
            ("row", self.row_labels, self.row_strategy),
            ("column", self.col_labels, self.col_strategy),
        ):
            if len(labels) != len(probs):
                raise ValueError(f"{name} strategy does not match its labels")
            if any(p < -1e-12 for p in probs):
                raise ValueError(f"negative {name} probability in {probs}")
            if abs(sum(probs) - 1.0) > 1e-9:
                raise ValueError(f"{name} strategy does not sum to 1: {probs}")
        if self.kind == "pure":
            if self.saddle is None:
                raise ValueError("pure solutions must name their saddle cell")
            if max(self.row_strategy) != 1.0 or max(self.col_strategy) != 1.0:
                raise ValueError("pure solutions must use unit strategy vectors")
        elif self.kind != "mixed":
            raise ValueError(f"unknown solution kind {self.kind!r}")

    @property
    def is_pure(self) -> bool:
        return self.kind == "pure"

    def row_probability(self, label: str) -> float:
        return self.row_strategy[self.row_labels.index(label)]

    def col_probability(self, label: str) -> float:
        return self.col_strategy[self.col_labels.index(label)]


def _dominance_pairs(vectors: np.ndarray, mode: Dominance,
                     prefer_small: bool) -> np.ndarray:
    """dominates[i, k] is True when line i makes line k disposable."""
    a = vectors[:, None, :]
    b = vectors[None, :, :]
    if prefer_small:  # column player keeps the smaller line
        better_eq, better = a <= b, a < b
    else:
        better_eq, better = a >= b, a > b
    if mode is Dominance.STRICT:
        dominates = better.all(axis=2)
    else:
        dominates = better_eq.all(axis=2) & better.any(axis=2)
    np.fill_diagonal(dominates, False)
    return dominates


def _candidates(labels, vectors: np.ndarray, mode: Dominance, line: str,
                prefer_small: bool) -> list[Elimination]:
    dominates = _dominance_pairs(vectors, mode, prefer_small)
    dominated = dominates.any(axis=0)
    out = []
    for k in range(len(labels)):
        if not dominated[k]:
            continue
        # report the lowest-indexed dominator that is itself undominated;
        # one always exists because dominance is a strict partial order
        dominators = [i for i in range(len(labels)) if dominates[i, k]]
        by = next(i for i in dominators if not dominated[i])
        if prefer_small:
            strict = bool((vectors[by] < vectors[k]).all())
        else:
            strict = bool((vectors[by] > vectors[k]).all())
        out.append(Elimination(line, labels[k], labels[by], strict))
    return out


def find_dominated(matrix: PayoffMatrix,
                   mode: Dominance = Dominance.WEAK) -> list[Elimination]:
    """All currently dominated rows and columns, rows listed first."""
    rows = _candidates(matrix.row_labels, matrix.entries, mode, ROW,
                       prefer_small=False)
    cols = _candidates(matrix.col_labels, matrix.entries.T, mode, COLUMN,
                       prefer_small=True)
    return rows + cols


def reduce(matrix: PayoffMatrix,
           mode: Dominance = Dominance.WEAK) -> tuple[PayoffMatrix, ReductionTrace]:
    """Iterate dominance elimination to a fixed point.

    One line is removed per iteration, rows before columns, lowest index
    first, so the reduction is reproducible.
    """
    trace: list[Elimination] = []
    current = matrix
    while True:
        candidates = find_dominated(current, mode)
        if not candidates:
            return current, tuple(trace)
        event = candidates[0]
        rows = list(range(len(current.row_labels)))
        cols = list(range(len(current.col_labels)))
        if event.line == ROW:
            rows.remove(current.row_index(event.label))
        else:
            cols.remove(current.col_index(event.label))
        current = current.select(rows, cols)
        trace.append(event)


def saddle_point(matrix: PayoffMatrix) -> tuple[str, str, float] | None:
    """Pure equilibrium cell, or None when maximin differs from minimax.

    Ties break toward the lowest row index, then the lowest column index.
    """
    entries = matrix.entries
    row_mins = entries.min(axis=1)
    col_maxes = entries.max(axis=0)
    maximin = row_mins.max()
    minimax = col_maxes.min()
    if maximin != minimax:
        return None
    i = int(np.argmax(row_mins == maximin))
    j = int(np.argmax(col_maxes == minimax))
    return matrix.row_labels[i], matrix.col_labels[j], float(entries[i, j])


def _pure_solution(matrix: PayoffMatrix, cell: tuple[str, str, float],
                   trace: ReductionTrace = ()) -> GameSolution:
    row_label, col_label, value = cell
    rows = tuple(1.0 if l == row_label else 0.0 for l in matrix.row_labels)
    cols = tuple(1.0 if l == col_label else 0.0 for l in matrix.col_labels)
    return GameSolution(value, matrix.row_labels, matrix.col_labels, rows, cols,
                        kind="pure", saddle=(row_label, col_label), trace=trace)


def solve_2x2(matrix: PayoffMatrix) -> GameSolution:
    """Mixed solution of a 2x2 game by the oddments method.

    Row odds are the absolute cross differences of the opposing row, and
    likewise for columns.  Intended for saddle-free games; if the odds
    vanish or fail to equalize the opponent's pure replies (both signs
    of a saddle), a DegenerateError is raised.
    """
    if matrix.shape != (2, 2):
        raise DegenerateError(f"oddments need a 2x2 matrix, got {matrix.shape}")
    a, b, c, d = (float(v) for v in matrix.entries.flat)
    row_odds = (abs(c - d), abs(a - b))
    col_odds = (abs(b - d), abs(a - c))
    if sum(row_odds) == 0.0 or sum(col_odds) == 0.0:
        raise DegenerateError("oddments vanish; the game has a saddle point")
    p = (row_odds[0] / sum(row_odds), row_odds[1] / sum(row_odds))
    q = (col_odds[0] / sum(col_odds), col_odds[1] / sum(col_odds))
    against = (
        p[0] * a + p[1] * c,
        p[0] * b + p[1] * d,
        q[0] * a + q[1] * b,
        q[0] * c + q[1] * d,
    )
    if max(against) - min(against) > 1e-9:
        raise DegenerateError("oddments do not equalize; the game has a saddle point")
    return GameSolution(against[0], matrix.row_labels, matrix.col_labels, p, q,
                        kind="mixed")


def solve_lp(matrix: PayoffMatrix, *, tol: float = 1e-9) -> GameSolution:
    """Minimax solution via the internal dense simplex.

    Payoffs are shifted positive, the column player's normalized program
    is solved directly, and the row strategy is recovered from the duals.
    """
    entries = matrix.entries
    lowest = float(entries.min())
    shift = 1.0 + abs(lowest) if lowest <= 0.0 else 0.0
    positive = entries + shift

    n_rows, n_cols = positive.shape
    result = simplex_maximize(np.ones(n_cols), positive, np.ones(n_rows), tol=tol)
    if result.objective <= 0.0:
        raise SolverError("minimax program collapsed to a non-positive optimum")
    shifted_value = 1.0 / result.objective

    col = np.maximum(result.x, 0.0)
    row = np.maximum(result.duals, 0.0)
    if col.sum() <= 0.0 or row.sum() <= 0.0:
        raise SolverError("simplex returned an unnormalizable strategy")
    col /= col.sum()
    row /= row.sum()
    return GameSolution(
        shifted_value - shift,
        matrix.row_labels,
        matrix.col_labels,
        tuple(float(v) for v in row),
        tuple(float(v) for v in col),
        kind="mixed",
    )


def _expand(solution: GameSolution, matrix: PayoffMatrix,
            trace: ReductionTrace) -> GameSolution:
    """Re-express a remnant solution over the original labels."""
    rows = tuple(
        solution.row_probability(l) if l in solution.row_labels else 0.0
        for l in matrix.row_labels
    )
    cols = tuple(
        solution.col_probability(l) if l in solution.col_labels else 0.0
        for l in matrix.col_labels
    )
    return GameSolution(solution.value, matrix.row_labels, matrix.col_labels,
                        rows, cols, kind=solution.kind, saddle=solution.saddle,
                        trace=trace)


def solve(matrix: PayoffMatrix,
          mode: Dominance = Dominance.WEAK) -> GameSolution:
    """Full pipeline: reduce, then oddments / saddle point / simplex."""
    reduced, trace = reduce(matrix, mode)
    if reduced.shape == (2, 2):
        try:
            remnant = solve_2x2(reduced)
        except DegenerateError:
            # a 2x2 that defeats oddments always has a saddle
            cell = saddle_point(reduced)
            if cell is None:
                raise
            remnant = _pure_solution(reduced, cell)
    else:
        cell = saddle_point(reduced)
        if cell is not None:
            remnant = _pure_solution(reduced, cell)
        else:
            remnant = solve_lp(reduced)
    return _expand(remnant, matrix, trace)


def interval_game_bounds(imatrix: IntervalPayoffMatrix,
                         mode: Dominance = Dominance.WEAK) -> tuple[float, float]:
    """Game value at the all-lower and all-upper endpoint realizations."""
    low = solve(imatrix.lower(), mode).value
    high = solve(imatrix.upper(), mode).value
    return low, high
