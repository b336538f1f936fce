"""Scenario vocabulary: parameter schemes, strategy profiles, threat timelines.

A scenario pits asset strategies (rows, maximizer) against threat
strategies (columns, minimizer).  Each strategy is a vector of parameter
values over a shared scheme; vectors are binary (0/1 ints), real (floats
in [-1, 1]), or spans (bounded intervals inside [-1, 1]).  Profiles may
omit their vector only when the scenario carries an explicit payoff
override matrix covering them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Sequence, Union

from .errors import (
    DegenerateError,
    DimensionError,
    LabelError,
    MixedScaleError,
    RangeError,
)
from .interval import Interval

if TYPE_CHECKING:
    from .payoff import IntervalPayoffMatrix, PayoffMatrix


class Role(str, Enum):
    ASSET = "asset"
    THREAT = "threat"


class Scale(str, Enum):
    BINARY = "binary"
    REAL = "real"
    SPAN = "span"


ParameterValue = Union[int, float, Interval]


def scale_of(value: ParameterValue) -> Scale:
    """Classify a single parameter value; ints are binary, floats real."""
    if isinstance(value, Interval):
        return Scale.SPAN
    if isinstance(value, bool) or isinstance(value, int):
        return Scale.BINARY
    if isinstance(value, float):
        return Scale.REAL
    raise RangeError(f"unsupported parameter value {value!r}")


def _check_value(value: ParameterValue, label: str, index: int) -> ParameterValue:
    kind = scale_of(value)
    where = f"profile {label!r} parameter {index}"
    if kind is Scale.BINARY:
        value = int(value)
        if value not in (0, 1):
            raise RangeError(f"{where}: binary values must be 0 or 1, got {value}")
        return value
    if kind is Scale.REAL:
        if math.isnan(value) or not -1.0 <= value <= 1.0:
            raise RangeError(f"{where}: real values must lie in [-1, 1], got {value}")
        return value
    if value.is_empty or not value.is_bounded:
        raise RangeError(f"{where}: spans must be bounded and non-empty")
    if not (-1.0 <= value.lo <= value.hi <= 1.0):
        raise RangeError(f"{where}: span endpoints must lie in [-1, 1]")
    return value


@dataclass(frozen=True)
class ParameterScheme:
    """Ordered parameter labels, optionally marking the cost-like one."""

    names: tuple[str, ...]
    cost_index: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(str(n) for n in self.names))
        if not self.names:
            raise DimensionError("a scheme needs at least one parameter name")
        if len(set(self.names)) != len(self.names):
            raise LabelError("scheme parameter names must be distinct")
        if self.cost_index is not None and not 0 <= self.cost_index < len(self.names):
            raise RangeError(f"cost_index {self.cost_index} outside the scheme")

    def __len__(self) -> int:
        return len(self.names)


@dataclass(frozen=True)
class StrategyProfile:
    """A labeled asset or threat strategy over the shared scheme.

    ``values`` may be None for a profile that only exists through an
    explicit payoff override (its payoffs are given, not derived).
    """

    label: str
    role: Role
    values: tuple[ParameterValue, ...] | None

    def __post_init__(self):
        object.__setattr__(self, "label", str(self.label))
        object.__setattr__(self, "role", Role(self.role))
        if not self.label:
            raise LabelError("profile labels must be non-empty")
        if self.values is None:
            return
        checked = tuple(
            _check_value(v, self.label, i) for i, v in enumerate(self.values)
        )
        kinds = {scale_of(v) for v in checked}
        if len(kinds) > 1:
            raise MixedScaleError(
                f"profile {self.label!r} mixes value kinds: "
                + ", ".join(sorted(k.value for k in kinds))
            )
        object.__setattr__(self, "values", checked)

    @property
    def scale(self) -> Scale | None:
        if self.values is None:
            return None
        return scale_of(self.values[0])


@dataclass(frozen=True)
class ThreatTimeline:
    """Per-threat occurrence probability for each period.

    The raw probabilities of one period need not sum to 1: each threat's
    probability completes to 1 only with its own non-occurrence.
    """

    periods: int
    pp: dict[str, tuple[float, ...]]

    def __post_init__(self):
        if self.periods < 1:
            raise DimensionError("a timeline needs at least one period")
        cleaned: dict[str, tuple[float, ...]] = {}
        for label, row in self.pp.items():
            row = tuple(float(p) for p in row)
            if len(row) != self.periods:
                raise DimensionError(
                    f"timeline for {label!r} has {len(row)} entries, "
                    f"expected {self.periods}"
                )
            for p in row:
                if math.isnan(p) or not 0.0 <= p <= 1.0:
                    raise RangeError(
                        f"timeline probability {p} for {label!r} outside [0, 1]"
                    )
            cleaned[str(label)] = row
        object.__setattr__(self, "pp", cleaned)

    def row_for_period(self, labels: Sequence[str], period: int) -> list[float]:
        if not 0 <= period < self.periods:
            raise IndexError(f"period {period} outside 0..{self.periods - 1}")
        missing = [l for l in labels if l not in self.pp]
        if missing:
            raise LabelError(f"timeline does not cover threats: {missing}")
        return [self.pp[l][period] for l in labels]


@dataclass(frozen=True)
class Scenario:
    """A full asset-versus-threat setup ready for payoff construction."""

    scheme: ParameterScheme
    assets: tuple[StrategyProfile, ...]
    threats: tuple[StrategyProfile, ...]
    timeline: ThreatTimeline | None = None
    payoff_overrides: "PayoffMatrix | IntervalPayoffMatrix | None" = None

    def __post_init__(self):
        object.__setattr__(self, "assets", tuple(self.assets))
        object.__setattr__(self, "threats", tuple(self.threats))

    @property
    def asset_labels(self) -> tuple[str, ...]:
        return tuple(p.label for p in self.assets)

    @property
    def threat_labels(self) -> tuple[str, ...]:
        return tuple(p.label for p in self.threats)

    @property
    def scale(self) -> Scale | None:
        """The shared scale of all value-bearing profiles, if any."""
        for profile in self.assets + self.threats:
            if profile.values is not None:
                return profile.scale
        return None


def validate_scenario(scenario: Scenario) -> Scenario:
    """Check every scenario invariant and return the scenario unchanged.

    Idempotent: a validated scenario validates to itself.
    """
    if not scenario.assets or not scenario.threats:
        raise DimensionError("a scenario needs at least one asset and one threat")

    for profile in scenario.assets:
        if profile.role is not Role.ASSET:
            raise LabelError(f"profile {profile.label!r} listed under assets "
                             f"but has role {profile.role.value}")
    for profile in scenario.threats:
        if profile.role is not Role.THREAT:
            raise LabelError(f"profile {profile.label!r} listed under threats "
                             f"but has role {profile.role.value}")

    labels = [p.label for p in scenario.assets + scenario.threats]
    if len(set(labels)) != len(labels):
        raise LabelError(f"asset and threat labels must be unique: {labels}")

    n = len(scenario.scheme)
    scales = set()
    for profile in scenario.assets + scenario.threats:
        if profile.values is None:
            if scenario.payoff_overrides is None:
                raise DimensionError(
                    f"profile {profile.label!r} has no values and the scenario "
                    "carries no payoff overrides"
                )
            continue
        if len(profile.values) != n:
            raise DimensionError(
                f"profile {profile.label!r} has {len(profile.values)} values, "
                f"scheme defines {n} parameters"
            )
        scales.add(profile.scale)
    if len(scales) > 1:
        raise MixedScaleError(
            "all profiles must share one value kind, found: "
            + ", ".join(sorted(s.value for s in scales))
        )

    if scenario.timeline is not None:
        known = set(scenario.timeline.pp)
        missing = [l for l in scenario.threat_labels if l not in known]
        if missing:
            raise LabelError(f"timeline does not cover threats: {missing}")
        unknown = sorted(known - set(scenario.threat_labels))
        if unknown:
            raise LabelError(f"timeline names unknown threats: {unknown}")

    overrides = scenario.payoff_overrides
    if overrides is not None:
        rows = tuple(getattr(overrides, "row_labels", ()))
        cols = tuple(getattr(overrides, "col_labels", ()))
        if rows != scenario.asset_labels or cols != scenario.threat_labels:
            raise LabelError(
                "payoff overrides must be labeled exactly like the scenario: "
                f"{rows} x {cols} vs {scenario.asset_labels} x {scenario.threat_labels}"
            )

    return scenario


def normalize_threat_probabilities(pp_row: Sequence[float]) -> list[float]:
    """Rescale one period's raw threat probabilities to sum to 1."""
    values = [float(p) for p in pp_row]
    if not values:
        raise DimensionError("cannot normalize an empty probability row")
    for p in values:
        if math.isnan(p) or not 0.0 <= p <= 1.0:
            raise RangeError(f"probability {p} outside [0, 1]")
    total = sum(values)
    if total == 0.0:
        raise DegenerateError("all threat probabilities are zero")
    return [p / total for p in values]
