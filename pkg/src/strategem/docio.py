"""JSON document schemas: scenario files in, result documents out.

Scenario values are coded by JSON type: integers are binary parameters,
floats are real parameters, two-element arrays are interval spans.
Unbounded interval endpoints serialize as the strings "inf" / "-inf",
and the empty interval as null.  Every result document round-trips
through ``parse_result``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any

from .errors import DocumentError
from .interval import EMPTY, Interval
from .model import (
    ParameterScheme,
    Role,
    Scenario,
    StrategyProfile,
    ThreatTimeline,
    validate_scenario,
)
from .payoff import EntropyConfig, IntervalPayoffMatrix, PayoffMatrix
from .solver import Elimination, GameSolution, ReductionTrace
from .whatif import PeriodValue, SolutionMovement, ValueSeries, WhatIfResult

RULES = ("diff", "entropy", "interval")


@dataclass(frozen=True)
class ScenarioDocument:
    """A parsed scenario file: the scenario plus its run preferences."""

    scenario: Scenario
    rule: str | None
    entropy: EntropyConfig | None


# ---------------------------------------------------------------------------
# scenario documents


def _endpoint_to_json(v: float) -> Any:
    if v == math.inf:
        return "inf"
    if v == -math.inf:
        return "-inf"
    return v


def _endpoint_from_json(v: Any) -> float:
    if v == "inf":
        return math.inf
    if v == "-inf":
        return -math.inf
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return float(v)
    raise DocumentError(f"bad interval endpoint {v!r}")


def interval_to_json(cell: Interval) -> Any:
    if cell.is_empty:
        return None
    return [_endpoint_to_json(cell.lo), _endpoint_to_json(cell.hi)]


def interval_from_json(data: Any) -> Interval:
    if data is None:
        return EMPTY
    if not isinstance(data, (list, tuple)) or len(data) != 2:
        raise DocumentError(f"intervals are [lo, hi] pairs, got {data!r}")
    try:
        return Interval(_endpoint_from_json(data[0]), _endpoint_from_json(data[1]))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def _parse_value(raw: Any):
    if isinstance(raw, bool):
        return int(raw)
    if isinstance(raw, int):
        return raw
    if isinstance(raw, float):
        return raw
    if isinstance(raw, (list, tuple)):
        return interval_from_json(raw)
    raise DocumentError(f"cannot read parameter value {raw!r}")


def _parse_profile(raw: Any, role: Role) -> StrategyProfile:
    if not isinstance(raw, dict) or "label" not in raw:
        raise DocumentError(f"profiles are objects with a label: {raw!r}")
    values = raw.get("values")
    if values is not None:
        if not isinstance(values, (list, tuple)):
            raise DocumentError(f"profile {raw['label']!r}: values must be an array")
        values = tuple(_parse_value(v) for v in values)
    return StrategyProfile(label=str(raw["label"]), role=role, values=values)


def _parse_overrides(raw: Any, row_labels, col_labels):
    if not isinstance(raw, (list, tuple)) or not raw:
        raise DocumentError("overrides must be a non-empty matrix")
    if not all(isinstance(row, (list, tuple)) for row in raw):
        raise DocumentError("overrides must be a matrix of rows")
    has_interval = any(
        isinstance(cell, (list, tuple)) for row in raw for cell in row
    )
    if has_interval:
        entries = [
            [interval_from_json(cell) if isinstance(cell, (list, tuple))
             else Interval.point(_number(cell)) for cell in row]
            for row in raw
        ]
        return IntervalPayoffMatrix(row_labels, col_labels, entries)
    return PayoffMatrix(row_labels, col_labels,
                        [[_number(cell) for cell in row] for row in raw])


def _number(raw: Any) -> float:
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise DocumentError(f"expected a number, got {raw!r}")
    return float(raw)


def _parse_timeline(raw: Any) -> ThreatTimeline:
    if not isinstance(raw, dict) or "periods" not in raw or "pp" not in raw:
        raise DocumentError("timeline needs 'periods' and 'pp'")
    pp = raw["pp"]
    if not isinstance(pp, dict) or not all(
        isinstance(v, (list, tuple)) for v in pp.values()
    ):
        raise DocumentError("timeline pp maps threat labels to probability arrays")
    if not isinstance(raw["periods"], int) or isinstance(raw["periods"], bool):
        raise DocumentError("timeline periods must be an integer")
    return ThreatTimeline(
        periods=raw["periods"],
        pp={str(k): tuple(_number(p) for p in v) for k, v in pp.items()},
    )


def _parse_entropy(raw: Any) -> EntropyConfig:
    if not isinstance(raw, dict):
        raise DocumentError("entropy config must be an object")
    costs = raw.get("costs")
    return EntropyConfig(
        costs=tuple(_number(c) for c in costs) if costs is not None else None,
        probability_floor=float(raw.get("probability_floor", 1e-9)),
        cost_from_scheme=bool(raw.get("cost_from_scheme", False)),
    )


def parse_scenario_document(doc: Any) -> ScenarioDocument:
    """Parse and validate one scenario document."""
    if not isinstance(doc, dict):
        raise DocumentError("a scenario document is a JSON object")
    scheme_raw = doc.get("scheme")
    if (not isinstance(scheme_raw, dict)
            or not isinstance(scheme_raw.get("names"), (list, tuple))):
        raise DocumentError("document needs scheme.names as an array")
    scheme = ParameterScheme(
        names=tuple(str(n) for n in scheme_raw["names"]),
        cost_index=scheme_raw.get("cost_index"),
    )
    for side in ("assets", "threats"):
        if not isinstance(doc.get(side, []), (list, tuple)):
            raise DocumentError(f"{side} must be an array of profiles")
    assets = tuple(_parse_profile(p, Role.ASSET) for p in doc.get("assets", ()))
    threats = tuple(_parse_profile(p, Role.THREAT) for p in doc.get("threats", ()))

    timeline = None
    if doc.get("timeline") is not None:
        timeline = _parse_timeline(doc["timeline"])

    overrides = None
    if doc.get("overrides") is not None:
        overrides = _parse_overrides(
            doc["overrides"],
            [p.label for p in assets],
            [p.label for p in threats],
        )

    rule = doc.get("rule")
    if rule is not None and rule not in RULES:
        raise DocumentError(f"rule must be one of {RULES}, got {rule!r}")

    entropy = None
    if doc.get("entropy") is not None:
        entropy = _parse_entropy(doc["entropy"])

    scenario = validate_scenario(Scenario(
        scheme=scheme,
        assets=assets,
        threats=threats,
        timeline=timeline,
        payoff_overrides=overrides,
    ))
    return ScenarioDocument(scenario=scenario, rule=rule, entropy=entropy)


def load_scenario_document(path: str) -> ScenarioDocument:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_scenario_document(json.load(handle))


# ---------------------------------------------------------------------------
# result documents


def _trace_to_json(trace: ReductionTrace) -> list[dict]:
    return [
        {
            "line": e.line,
            "label": e.label,
            "by": e.by,
            "strict": e.strict,
            "text": e.describe(),
        }
        for e in trace
    ]


def _trace_from_json(raw: Any) -> ReductionTrace:
    return tuple(
        Elimination(line=e["line"], label=e["label"], by=e["by"],
                    strict=bool(e["strict"]))
        for e in raw
    )


def matrix_to_doc(matrix: PayoffMatrix) -> dict:
    return {
        "type": "payoff_matrix",
        "rows": list(matrix.row_labels),
        "cols": list(matrix.col_labels),
        "entries": matrix.to_lists(),
    }


def interval_matrix_to_doc(matrix: IntervalPayoffMatrix) -> dict:
    return {
        "type": "interval_payoff_matrix",
        "rows": list(matrix.row_labels),
        "cols": list(matrix.col_labels),
        "entries": [[interval_to_json(cell) for cell in row]
                    for row in matrix.entries],
    }


def solution_to_doc(solution: GameSolution) -> dict:
    return {
        "type": "game_solution",
        "value": solution.value,
        "kind": solution.kind,
        "saddle": list(solution.saddle) if solution.saddle else None,
        "rows": list(solution.row_labels),
        "cols": list(solution.col_labels),
        "row_strategy": list(solution.row_strategy),
        "col_strategy": list(solution.col_strategy),
        "trace": _trace_to_json(solution.trace),
    }


def series_to_doc(series: ValueSeries) -> dict:
    return {
        "type": "value_series",
        "rule": series.rule,
        "periods": [
            {
                "period": r.period,
                "value": r.value,
                "kind": r.kind,
                "saddle": list(r.saddle) if r.saddle else None,
            }
            for r in series.records
        ],
    }


def whatif_to_doc(result: WhatIfResult) -> dict:
    return {
        "type": "whatif_result",
        "baseline": result.baseline,
        "achieved": result.achieved,
        "delta": result.delta,
        "rows": list(result.realization.row_labels),
        "cols": list(result.realization.col_labels),
        "realization": result.realization.to_lists(),
        "deviations": [list(row) for row in result.deviations],
    }


def sensitivity_to_doc(entry: tuple[str, str], delta: float, baseline: float,
                       solution: GameSolution, value_change: float) -> dict:
    return {
        "type": "sensitivity",
        "entry": list(entry),
        "delta": delta,
        "baseline": baseline,
        "new_value": solution.value,
        "value_change": value_change,
        "solution": solution_to_doc(solution),
    }


def movement_to_doc(movement: SolutionMovement) -> dict:
    return {
        "type": "solution_movement",
        "value_before": movement.value_before,
        "value_after": movement.value_after,
        "value_delta": movement.value_delta,
        "kind_before": movement.kind_before,
        "kind_after": movement.kind_after,
        "kind_changed": movement.kind_changed,
        "saddle_before": list(movement.saddle_before) if movement.saddle_before else None,
        "saddle_after": list(movement.saddle_after) if movement.saddle_after else None,
        "moved": movement.moved,
        "description": movement.description,
    }


def parse_result(doc: Any):
    """Rebuild a result object from its document form."""
    if not isinstance(doc, dict) or "type" not in doc:
        raise DocumentError("result documents carry a 'type' discriminator")
    kind = doc["type"]
    try:
        if kind == "payoff_matrix":
            return PayoffMatrix(doc["rows"], doc["cols"], doc["entries"])
        if kind == "interval_payoff_matrix":
            return IntervalPayoffMatrix(
                doc["rows"], doc["cols"],
                [[interval_from_json(cell) for cell in row]
                 for row in doc["entries"]],
            )
        if kind == "game_solution":
            return GameSolution(
                value=float(doc["value"]),
                row_labels=tuple(doc["rows"]),
                col_labels=tuple(doc["cols"]),
                row_strategy=tuple(float(p) for p in doc["row_strategy"]),
                col_strategy=tuple(float(p) for p in doc["col_strategy"]),
                kind=doc["kind"],
                saddle=tuple(doc["saddle"]) if doc.get("saddle") else None,
                trace=_trace_from_json(doc.get("trace", ())),
            )
        if kind == "value_series":
            return ValueSeries(
                rule=doc["rule"],
                records=tuple(
                    PeriodValue(
                        period=int(r["period"]),
                        value=float(r["value"]),
                        kind=r["kind"],
                        saddle=tuple(r["saddle"]) if r.get("saddle") else None,
                    )
                    for r in doc["periods"]
                ),
            )
        if kind == "whatif_result":
            realization = PayoffMatrix(doc["rows"], doc["cols"], doc["realization"])
            return WhatIfResult(
                realization=realization,
                achieved=float(doc["achieved"]),
                baseline=float(doc["baseline"]),
                delta=float(doc["delta"]),
                deviations=tuple(tuple(float(v) for v in row)
                                 for row in doc["deviations"]),
            )
    except KeyError as exc:
        raise DocumentError(f"result document missing field {exc}") from exc
    raise DocumentError(f"unknown result type {kind!r}")


def dump_document(doc: dict, indent: int | None = 2) -> str:
    return json.dumps(doc, indent=indent)
