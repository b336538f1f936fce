"""Zero-sum matrix-game toolkit for asset-versus-threat strategy analysis.

Model a project as a two-player zero-sum game: internal assets pick rows
and maximize, external market threats pick columns and minimize.  Payoff
matrices are built from strategy parameter vectors under a difference,
profit-entropy, or interval rule, solved by dominance reduction plus
saddle-point / oddments / simplex methods, and explored chronologically
or entry-by-entry.
"""

from .errors import (
    ConfigError,
    DegenerateError,
    DimensionError,
    DocumentError,
    EmptyOperandError,
    LabelError,
    MixedScaleError,
    RangeError,
    ScaleError,
    SizeError,
    SolverError,
    StepError,
    StrategemError,
    TimelineError,
)
from .interval import EMPTY, Interval, add, div, mul, recip, sub
from .model import (
    ParameterScheme,
    Role,
    Scale,
    Scenario,
    StrategyProfile,
    ThreatTimeline,
    normalize_threat_probabilities,
    validate_scenario,
)
from .payoff import (
    EntropyConfig,
    IntervalPayoffMatrix,
    PayoffMatrix,
    build_diff_matrix,
    build_entropy_matrix,
    build_interval_matrix,
    build_matrix,
    diff_payoff,
    entropy_score,
    probability_profile,
    time_weighted_matrix,
)
from .solver import (
    Dominance,
    Elimination,
    GameSolution,
    ReductionTrace,
    find_dominated,
    interval_game_bounds,
    reduce,
    saddle_point,
    solve,
    solve_2x2,
    solve_lp,
)
from .whatif import (
    PeriodValue,
    SolutionMovement,
    ValueSeries,
    WhatIfResult,
    compare_solutions,
    optimize_within_intervals,
    sensitivity,
    timeline_values,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError", "DegenerateError", "DimensionError", "DocumentError",
    "EmptyOperandError", "LabelError", "MixedScaleError", "RangeError",
    "ScaleError", "SizeError", "SolverError", "StepError", "StrategemError",
    "TimelineError",
    "EMPTY", "Interval", "add", "div", "mul", "recip", "sub",
    "ParameterScheme", "Role", "Scale", "Scenario", "StrategyProfile",
    "ThreatTimeline", "normalize_threat_probabilities", "validate_scenario",
    "EntropyConfig", "IntervalPayoffMatrix", "PayoffMatrix",
    "build_diff_matrix", "build_entropy_matrix", "build_interval_matrix",
    "build_matrix", "diff_payoff", "entropy_score", "probability_profile",
    "time_weighted_matrix",
    "Dominance", "Elimination", "GameSolution", "ReductionTrace",
    "find_dominated", "interval_game_bounds", "reduce", "saddle_point",
    "solve", "solve_2x2", "solve_lp",
    "PeriodValue", "SolutionMovement", "ValueSeries", "WhatIfResult",
    "compare_solutions", "optimize_within_intervals", "sensitivity",
    "timeline_values",
]
