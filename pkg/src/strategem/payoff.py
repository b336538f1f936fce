"""Payoff matrices and the three construction rules.

The difference rule sums componentwise asset-minus-threat differences.
The profit-entropy rule scores each strategy's normalized parameter
vector with sum(-p/cost * log2(p)) and takes asset score minus threat
score, preserving the zero-sum reading.  The interval rule performs the
difference componentwise in interval arithmetic.  Explicit payoff
overrides in the scenario replace vector derivation verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import interval as iv
from .errors import (
    ConfigError,
    DimensionError,
    LabelError,
    RangeError,
    ScaleError,
)
from .interval import Interval
from .model import (
    Scale,
    Scenario,
    StrategyProfile,
    ThreatTimeline,
    normalize_threat_probabilities,
)


def _unique_labels(labels: Iterable[str], what: str) -> tuple[str, ...]:
    out = tuple(str(l) for l in labels)
    if not out:
        raise DimensionError(f"matrix needs at least one {what}")
    if len(set(out)) != len(out):
        raise LabelError(f"duplicate {what} labels: {out}")
    return out


class PayoffMatrix:
    """Dense real payoff matrix: rows are assets, columns are threats."""

    __slots__ = ("row_labels", "col_labels", "entries")

    def __init__(self, row_labels, col_labels, entries):
        self.row_labels = _unique_labels(row_labels, "row")
        self.col_labels = _unique_labels(col_labels, "column")
        arr = np.array(entries, dtype=float)
        if arr.shape != (len(self.row_labels), len(self.col_labels)):
            raise DimensionError(
                f"entries shape {arr.shape} does not match "
                f"{len(self.row_labels)} x {len(self.col_labels)} labels"
            )
        arr.flags.writeable = False
        self.entries = arr

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def row_index(self, label: str) -> int:
        try:
            return self.row_labels.index(label)
        except ValueError:
            raise LabelError(f"unknown row label {label!r}") from None

    def col_index(self, label: str) -> int:
        try:
            return self.col_labels.index(label)
        except ValueError:
            raise LabelError(f"unknown column label {label!r}") from None

    def entry(self, row_label: str, col_label: str) -> float:
        return float(self.entries[self.row_index(row_label), self.col_index(col_label)])

    def with_entry(self, row_label: str, col_label: str, value: float) -> "PayoffMatrix":
        arr = self.entries.copy()
        arr[self.row_index(row_label), self.col_index(col_label)] = value
        return PayoffMatrix(self.row_labels, self.col_labels, arr)

    def select(self, rows: Sequence[int], cols: Sequence[int]) -> "PayoffMatrix":
        return PayoffMatrix(
            [self.row_labels[i] for i in rows],
            [self.col_labels[j] for j in cols],
            self.entries[np.ix_(rows, cols)],
        )

    def scale_columns(self, factors: Sequence[float]) -> "PayoffMatrix":
        factors = np.asarray(factors, dtype=float)
        if factors.shape != (len(self.col_labels),):
            raise DimensionError("one factor per column required")
        return PayoffMatrix(self.row_labels, self.col_labels, self.entries * factors)

    def shifted(self, constant: float) -> "PayoffMatrix":
        return PayoffMatrix(self.row_labels, self.col_labels, self.entries + constant)

    def to_lists(self) -> list[list[float]]:
        return [[float(v) for v in row] for row in self.entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PayoffMatrix):
            return NotImplemented
        return (
            self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
            and np.array_equal(self.entries, other.entries)
        )

    def __repr__(self) -> str:
        return (
            f"PayoffMatrix(rows={self.row_labels}, cols={self.col_labels}, "
            f"entries={self.to_lists()})"
        )


class IntervalPayoffMatrix:
    """Dense matrix of bounded, non-empty payoff intervals."""

    __slots__ = ("row_labels", "col_labels", "entries")

    def __init__(self, row_labels, col_labels, entries):
        self.row_labels = _unique_labels(row_labels, "row")
        self.col_labels = _unique_labels(col_labels, "column")
        rows = []
        for r, row in enumerate(entries):
            cells = tuple(row)
            if len(cells) != len(self.col_labels):
                raise DimensionError("ragged interval matrix")
            for cell in cells:
                if not isinstance(cell, Interval):
                    raise RangeError(f"entry {cell!r} is not an interval")
                if cell.is_empty or not cell.is_bounded:
                    raise RangeError("interval payoffs must be bounded and non-empty")
            rows.append(cells)
        if len(rows) != len(self.row_labels):
            raise DimensionError("ragged interval matrix")
        self.entries = tuple(rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_labels), len(self.col_labels))

    def entry(self, row_label: str, col_label: str) -> Interval:
        r = self.row_labels.index(row_label) if row_label in self.row_labels else -1
        c = self.col_labels.index(col_label) if col_label in self.col_labels else -1
        if r < 0 or c < 0:
            raise LabelError(f"unknown cell ({row_label!r}, {col_label!r})")
        return self.entries[r][c]

    def _map(self, picker) -> PayoffMatrix:
        return PayoffMatrix(
            self.row_labels,
            self.col_labels,
            [[picker(cell) for cell in row] for row in self.entries],
        )

    def lower(self) -> PayoffMatrix:
        return self._map(lambda c: c.lo)

    def upper(self) -> PayoffMatrix:
        return self._map(lambda c: c.hi)

    def midpoint(self) -> PayoffMatrix:
        return self._map(lambda c: c.midpoint)

    def widths(self) -> list[list[float]]:
        return [[cell.width for cell in row] for row in self.entries]

    def encloses(self, matrix: PayoffMatrix, tol: float = 0.0) -> bool:
        if (matrix.row_labels, matrix.col_labels) != (self.row_labels, self.col_labels):
            return False
        return all(
            cell.contains(float(matrix.entries[r, c]), tol)
            for r, row in enumerate(self.entries)
            for c, cell in enumerate(row)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalPayoffMatrix):
            return NotImplemented
        return (
            self.row_labels == other.row_labels
            and self.col_labels == other.col_labels
            and self.entries == other.entries
        )

    def __repr__(self) -> str:
        return (
            f"IntervalPayoffMatrix(rows={self.row_labels}, cols={self.col_labels}, "
            f"entries={self.entries!r})"
        )


@dataclass(frozen=True)
class EntropyConfig:
    """Knobs for the profit-entropy score.

    ``costs`` holds one positive weight per scheme parameter (all 1 when
    omitted).  ``probability_floor`` replaces non-positive probabilities
    before logarithms.  When ``cost_from_scheme`` is set and the scheme
    marks a cost parameter, that parameter's raw value additionally
    scales every term of the profile it belongs to.
    """

    costs: tuple[float, ...] | None = None
    probability_floor: float = 1e-9
    cost_from_scheme: bool = False

    def __post_init__(self):
        if self.costs is not None:
            costs = tuple(float(c) for c in self.costs)
            if any(c <= 0.0 for c in costs):
                raise ConfigError(f"costs must be positive: {costs}")
            object.__setattr__(self, "costs", costs)
        if not 0.0 < self.probability_floor < 1.0:
            raise ConfigError(
                f"probability floor must lie in (0, 1): {self.probability_floor}"
            )

    def cost_vector(self, n: int) -> np.ndarray:
        if self.costs is None:
            return np.ones(n)
        if len(self.costs) != n:
            raise ConfigError(
                f"{len(self.costs)} costs configured for {n} parameters"
            )
        return np.asarray(self.costs)


def diff_payoff(asset_values: Sequence[float], threat_values: Sequence[float]) -> float:
    """Sum of componentwise asset-minus-threat differences."""
    if len(asset_values) != len(threat_values):
        raise DimensionError(
            f"vector lengths differ: {len(asset_values)} vs {len(threat_values)}"
        )
    return float(sum(float(a) - float(t) for a, t in zip(asset_values, threat_values)))


def _overrides_as_real(scenario: Scenario) -> PayoffMatrix | None:
    overrides = scenario.payoff_overrides
    if overrides is None:
        return None
    if isinstance(overrides, PayoffMatrix):
        return overrides
    raise ScaleError("interval payoff overrides require the interval rule")


def _require_scale(scenario: Scenario, allowed: set[Scale], rule: str) -> None:
    scale = scenario.scale
    if scale is None or scale not in allowed:
        names = " or ".join(sorted(s.value for s in allowed))
        raise ScaleError(
            f"the {rule} rule needs {names} profiles, got "
            f"{scale.value if scale else 'no parameter vectors'}"
        )


def build_diff_matrix(scenario: Scenario) -> PayoffMatrix:
    """Difference-rule payoff matrix; overrides are used verbatim."""
    override = _overrides_as_real(scenario)
    if override is not None:
        return override
    _require_scale(scenario, {Scale.BINARY, Scale.REAL}, "difference")
    entries = [
        [diff_payoff(a.values, t.values) for t in scenario.threats]
        for a in scenario.assets
    ]
    return PayoffMatrix(scenario.asset_labels, scenario.threat_labels, entries)


def probability_profile(values: Sequence[float], floor: float = 1e-9) -> np.ndarray:
    """Map a raw parameter vector onto the probability simplex.

    Values at or below the floor (including zeros and negatives) are
    clamped to the floor, then the vector is rescaled to sum to 1.
    """
    v = np.asarray([float(x) for x in values], dtype=float)
    if v.size == 0:
        raise DimensionError("cannot normalize an empty vector")
    v = np.maximum(v, floor)
    return v / v.sum()


def entropy_score(values: Sequence[float], config: EntropyConfig | None = None) -> float:
    """sum(-v/cost * log2(v)) over a vector already normalized to sum 1."""
    config = config or EntropyConfig()
    v = np.asarray([float(x) for x in values], dtype=float)
    if np.any(v <= 0.0):
        raise RangeError("entropy is defined on strictly positive probabilities")
    costs = config.cost_vector(v.size)
    return float(np.sum(-(v / costs) * np.log2(v)))


def _profile_entropy(profile: StrategyProfile, scenario: Scenario,
                     config: EntropyConfig) -> float:
    probs = probability_profile(profile.values, config.probability_floor)
    score = entropy_score(probs, config)
    if config.cost_from_scheme and scenario.scheme.cost_index is not None:
        scalar = float(profile.values[scenario.scheme.cost_index])
        if scalar <= 0.0:
            raise ConfigError(
                f"profile {profile.label!r} has non-positive cost value {scalar}"
            )
        score /= scalar
    return score


def build_entropy_matrix(scenario: Scenario,
                         config: EntropyConfig | None = None) -> PayoffMatrix:
    """Profit-entropy payoff matrix: asset score minus threat score."""
    config = config or EntropyConfig()
    override = _overrides_as_real(scenario)
    if override is not None:
        return override
    _require_scale(scenario, {Scale.REAL}, "entropy")
    asset_scores = [_profile_entropy(p, scenario, config) for p in scenario.assets]
    threat_scores = [_profile_entropy(p, scenario, config) for p in scenario.threats]
    entries = [[a - t for t in threat_scores] for a in asset_scores]
    return PayoffMatrix(scenario.asset_labels, scenario.threat_labels, entries)


def build_interval_matrix(scenario: Scenario) -> IntervalPayoffMatrix:
    """Interval-rule payoff matrix.

    Interval overrides are used verbatim; real-valued overrides are
    promoted to point intervals.  Without overrides the profiles must be
    spans, and each entry is the componentwise interval difference sum.
    """
    overrides = scenario.payoff_overrides
    if isinstance(overrides, IntervalPayoffMatrix):
        return overrides
    if isinstance(overrides, PayoffMatrix):
        return IntervalPayoffMatrix(
            overrides.row_labels,
            overrides.col_labels,
            [[Interval.point(v) for v in row] for row in overrides.to_lists()],
        )
    _require_scale(scenario, {Scale.SPAN}, "interval")

    def cell(asset: StrategyProfile, threat: StrategyProfile) -> Interval:
        total = Interval.point(0.0)
        for a, t in zip(asset.values, threat.values):
            total = iv.add(total, iv.sub(a, t))
        return total

    entries = [[cell(a, t) for t in scenario.threats] for a in scenario.assets]
    return IntervalPayoffMatrix(scenario.asset_labels, scenario.threat_labels, entries)


def build_matrix(scenario: Scenario, rule: str,
                 config: EntropyConfig | None = None):
    """Dispatch to the builder for ``rule`` (diff, entropy, or interval)."""
    if rule == "diff":
        return build_diff_matrix(scenario)
    if rule == "entropy":
        return build_entropy_matrix(scenario, config)
    if rule == "interval":
        return build_interval_matrix(scenario)
    raise ScaleError(f"unknown payoff rule {rule!r}")


def time_weighted_matrix(base: PayoffMatrix, timeline: ThreatTimeline,
                         period: int) -> PayoffMatrix:
    """Tilt columns by the period's normalized threat probabilities.

    Weights are scaled by the column count so a uniform period leaves
    the matrix unchanged; a zero-probability threat zeroes its column.
    """
    pp_row = timeline.row_for_period(base.col_labels, period)
    weights = normalize_threat_probabilities(pp_row)
    n = len(base.col_labels)
    return base.scale_columns([w * n for w in weights])
