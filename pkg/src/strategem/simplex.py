"""Dense tableau simplex for the small linear programs behind the solver.

Solves  maximize c.x  subject to  A x <= b,  x >= 0  with b >= 0, so the
slack basis is immediately feasible and no phase-one pass is needed.
Bland's rule on both the entering and leaving choices guarantees
termination on the degenerate tableaus that matrix games produce.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SolverError


@dataclass(frozen=True)
class SimplexResult:
    objective: float
    x: np.ndarray
    duals: np.ndarray
    iterations: int


def simplex_maximize(c, A, b, *, tol: float = 1e-9,
                     max_iter: int = 10_000) -> SimplexResult:
    """Run the simplex method and return optimum, solution, and duals.

    The duals are the shadow prices of the inequality constraints, read
    from the slack columns of the final objective row.
    """
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    if A.ndim != 2:
        raise SolverError("constraint matrix must be two-dimensional")
    m, n = A.shape
    if b.shape != (m,) or c.shape != (n,):
        raise SolverError(f"inconsistent LP shapes: A{A.shape}, b{b.shape}, c{c.shape}")
    if np.any(b < 0):
        raise SolverError("right-hand side must be nonnegative")

    # tableau: m constraint rows then the objective row;
    # columns: n structural vars, m slacks, rhs
    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n] = A
    T[:m, n:n + m] = np.eye(m)
    T[:m, -1] = b
    T[m, :n] = -c
    basis = list(range(n, n + m))

    for iteration in range(max_iter):
        col = -1
        for j in range(n + m):
            if T[m, j] < -tol:
                col = j
                break
        if col < 0:
            x = np.zeros(n + m)
            x[basis] = T[:m, -1]
            duals = T[m, n:n + m].copy()
            return SimplexResult(float(T[m, -1]), x[:n], duals, iteration)

        pivot_row = -1
        best_ratio = math.inf
        for i in range(m):
            coeff = T[i, col]
            if coeff > tol:
                ratio = T[i, -1] / coeff
                if ratio < best_ratio - 1e-12 or (
                    abs(ratio - best_ratio) <= 1e-12
                    and pivot_row >= 0
                    and basis[i] < basis[pivot_row]
                ):
                    best_ratio = ratio
                    pivot_row = i
        if pivot_row < 0:
            raise SolverError("linear program is unbounded")

        T[pivot_row] /= T[pivot_row, col]
        for i in range(m + 1):
            if i != pivot_row and T[i, col] != 0.0:
                T[i] -= T[i, col] * T[pivot_row]
        basis[pivot_row] = col

    raise SolverError(f"simplex did not converge within {max_iter} iterations")
