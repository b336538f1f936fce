"""Independent brute-force oracles; test-only, never imported by the package."""

from __future__ import annotations

import math

import numpy as np


def diff_matrix_oracle(asset_vectors, threat_vectors):
    """Plain-loop componentwise difference sums."""
    out = []
    for asset in asset_vectors:
        row = []
        for threat in threat_vectors:
            total = 0.0
            for a, t in zip(asset, threat):
                total += float(a) - float(t)
            row.append(total)
        out.append(row)
    return out


def entropy_score_oracle(values, costs=None, floor=1e-9):
    """Floor, renormalize, then sum -p/cost * log2(p) term by term."""
    w = [max(float(v), floor) for v in values]
    total = sum(w)
    w = [v / total for v in w]
    costs = costs or [1.0] * len(w)
    return sum(-(p / c) * math.log2(p) for p, c in zip(w, costs))


def simplex_grid(n: int, step: float) -> np.ndarray:
    """All points of the n-simplex whose coordinates are multiples of step."""
    k = round(1.0 / step)

    def compositions(remaining: int, dims: int):
        if dims == 1:
            yield (remaining,)
            return
        for i in range(remaining + 1):
            for rest in compositions(remaining - i, dims - 1):
                yield (i,) + rest

    return np.array([[c / k for c in combo] for combo in compositions(k, n)])


def grid_maximin(entries, step: float = 0.01) -> float:
    """Maximin over both players' gridded mixed strategies."""
    A = np.asarray(entries, dtype=float)
    X = simplex_grid(A.shape[0], step)
    Y = simplex_grid(A.shape[1], step)
    XA = X @ A
    mins = np.full(X.shape[0], np.inf)
    for start in range(0, Y.shape[0], 512):
        block = Y[start:start + 512]
        mins = np.minimum(mins, (XA @ block.T).min(axis=1))
    return float(mins.max())
