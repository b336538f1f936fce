"""Shared fixtures: the worked scenarios every module exercises."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from strategem import (
    Interval,
    ParameterScheme,
    PayoffMatrix,
    Role,
    Scenario,
    StrategyProfile,
    ThreatTimeline,
    validate_scenario,
)

PARAM_NAMES = ("competition", "trends", "costs", "marketing", "sales", "other")

BINARY_VECTORS = {
    "A": (1, 0, 1, 1, 1, 0),
    "B": (0, 1, 1, 0, 0, 1),
    "C": (0, 1, 1, 0, 0, 0),
    "D": (1, 0, 1, 0, 1, 1),
    "E": (1, 1, 0, 1, 1, 1),
}

REAL_VECTORS = {
    "A": (0.88, 0.24, 0.52, 0.91, 0.71, 0.02),
    "B": (0.32, 0.68, 0.53, 0.14, 0.06, 0.77),
    "C": (0.05, 0.61, 0.53, 0.12, 0.08, 0.30),
    "D": (0.81, 0.11, 0.50, 0.22, 0.72, 0.84),
    "E": (0.67, 0.72, 0.07, 0.55, 0.60, 0.53),
}

# the reference 2x3 binary game; note its B row cannot be derived from
# any binary vectors against C, D, E above: their sums fix the row's
# consecutive differences to (2, 1), while (2, -1, -2) needs (3, 1)
BINARY_MATRIX = [[2.0, 0.0, -1.0], [2.0, -1.0, -2.0]]

# what the declared vectors actually derive to; only (B, C) differs
DERIVED_BINARY_MATRIX = [[2.0, 0.0, -1.0], [1.0, -1.0, -2.0]]

# the 3x3 game after appending the corrective row X; only the (X,D) and
# (X,E) payoffs are externally anchored, (X,C) is chosen so the column C
# elimination survives strict-mode reduction
EXTENDED_OVERRIDES = [
    [1.59, 0.08, 0.14],
    [0.81, -0.70, -0.64],
    [1.20, 0.24, 0.14],
]

EXTENDED_2X2 = [[0.08, 0.14], [0.24, 0.14]]

SCENARIO_DIR = Path(__file__).resolve().parent.parent / "scenarios"


def _profiles(vectors, labels, role):
    return tuple(
        StrategyProfile(label=l, role=role, values=vectors[l]) for l in labels
    )


def make_scenario(vectors, timeline=None, overrides=None) -> Scenario:
    return validate_scenario(Scenario(
        scheme=ParameterScheme(PARAM_NAMES, cost_index=2),
        assets=_profiles(vectors, ("A", "B"), Role.ASSET),
        threats=_profiles(vectors, ("C", "D", "E"), Role.THREAT),
        timeline=timeline,
        payoff_overrides=overrides,
    ))


@pytest.fixture
def binary_scenario() -> Scenario:
    return make_scenario(BINARY_VECTORS)


@pytest.fixture
def real_scenario() -> Scenario:
    return make_scenario(REAL_VECTORS)


@pytest.fixture
def extended_scenario() -> Scenario:
    """All-override scenario for the game with the added row X."""
    overrides = PayoffMatrix(("A", "B", "X"), ("C", "D", "E"), EXTENDED_OVERRIDES)
    return validate_scenario(Scenario(
        scheme=ParameterScheme(PARAM_NAMES, cost_index=2),
        assets=tuple(StrategyProfile(l, Role.ASSET, None) for l in ("A", "B", "X")),
        threats=tuple(StrategyProfile(l, Role.THREAT, None) for l in ("C", "D", "E")),
        payoff_overrides=overrides,
    ))


def span_vectors(radius: float = 0.02) -> dict[str, tuple[Interval, ...]]:
    return {
        label: tuple(
            Interval(round(v - radius, 2), round(v + radius, 2))
            for v in values
        )
        for label, values in REAL_VECTORS.items()
    }


@pytest.fixture
def interval_scenario() -> Scenario:
    return make_scenario(span_vectors())


TIMELINE_PP = {
    "C": (0.50, 0.55, 0.60, 0.65, 0.70, 0.75, 0.80, 0.85, 0.90, 0.95),
    "D": (0.40, 0.42, 0.44, 0.46, 0.48, 0.50, 0.52, 0.54, 0.56, 0.58),
    "E": (0.80, 0.75, 0.70, 0.65, 0.60, 0.55, 0.50, 0.45, 0.40, 0.35),
}


@pytest.fixture
def timeline_scenario() -> Scenario:
    return make_scenario(REAL_VECTORS,
                         timeline=ThreatTimeline(periods=10, pp=dict(TIMELINE_PP)))


@pytest.fixture
def scenario_dir() -> Path:
    return SCENARIO_DIR


@pytest.fixture
def binary_doc_path(scenario_dir) -> str:
    return str(scenario_dir / "binary.json")


@pytest.fixture
def real_doc_path(scenario_dir) -> str:
    return str(scenario_dir / "real.json")


@pytest.fixture
def extended_doc_path(scenario_dir) -> str:
    return str(scenario_dir / "extended.json")


@pytest.fixture
def intervals_doc_path(scenario_dir) -> str:
    return str(scenario_dir / "intervals.json")


@pytest.fixture
def timeline_doc_path(scenario_dir) -> str:
    return str(scenario_dir / "timeline.json")


@pytest.fixture
def write_doc(tmp_path):
    """Write an ad-hoc scenario document and return its path."""

    def _write(document: dict, name: str = "scenario.json") -> str:
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return str(path)

    return _write
