"""Scenario document parsing and result serialization round-trips."""

import json
import math
import random
import string

import pytest

from strategem import (
    DocumentError,
    EMPTY,
    Elimination,
    GameSolution,
    Interval,
    IntervalPayoffMatrix,
    MixedScaleError,
    PayoffMatrix,
    PeriodValue,
    Scale,
    ValueSeries,
    WhatIfResult,
)
from strategem.docio import (
    interval_from_json,
    interval_matrix_to_doc,
    interval_to_json,
    load_scenario_document,
    matrix_to_doc,
    parse_result,
    parse_scenario_document,
    series_to_doc,
    solution_to_doc,
    whatif_to_doc,
)


class TestScenarioParsing:
    def test_reference_documents_load(self, binary_doc_path, real_doc_path,
                                      extended_doc_path, intervals_doc_path,
                                      timeline_doc_path):
        binary = load_scenario_document(binary_doc_path)
        assert binary.scenario.scale is Scale.BINARY
        assert binary.rule == "diff"

        real = load_scenario_document(real_doc_path)
        assert real.scenario.scale is Scale.REAL

        extended = load_scenario_document(extended_doc_path)
        assert extended.scenario.payoff_overrides is not None
        assert extended.scenario.payoff_overrides.entry("X", "D") == 0.24

        intervals = load_scenario_document(intervals_doc_path)
        assert intervals.scenario.scale is Scale.SPAN
        assert intervals.rule == "interval"

        timeline = load_scenario_document(timeline_doc_path)
        assert timeline.scenario.timeline.periods == 10

    def test_json_type_selects_the_scale(self):
        doc = {
            "scheme": {"names": ["p1", "p2"]},
            "assets": [{"label": "A", "values": [1, 0]}],
            "threats": [{"label": "C", "values": [0, 1]}],
        }
        parsed = parse_scenario_document(doc)
        assert parsed.scenario.scale is Scale.BINARY

        doc["assets"][0]["values"] = [0.5, 0.25]
        doc["threats"][0]["values"] = [0.5, 0.75]
        assert parse_scenario_document(doc).scenario.scale is Scale.REAL

        doc["assets"][0]["values"] = [[0.1, 0.2], [0.3, 0.4]]
        doc["threats"][0]["values"] = [[0.0, 0.1], [0.2, 0.3]]
        assert parse_scenario_document(doc).scenario.scale is Scale.SPAN

    def test_mixed_scales_rejected(self):
        doc = {
            "scheme": {"names": ["p1"]},
            "assets": [{"label": "A", "values": [1]}],
            "threats": [{"label": "C", "values": [0.5]}],
        }
        with pytest.raises(MixedScaleError):
            parse_scenario_document(doc)

    def test_interval_overrides(self):
        doc = {
            "scheme": {"names": ["p1"]},
            "assets": [{"label": "A", "values": None}],
            "threats": [{"label": "C", "values": None}],
            "overrides": [[[0.1, 0.3]]],
        }
        parsed = parse_scenario_document(doc)
        assert isinstance(parsed.scenario.payoff_overrides, IntervalPayoffMatrix)
        assert parsed.scenario.payoff_overrides.entry("A", "C") == Interval(0.1, 0.3)

    def test_unknown_rule_rejected(self):
        doc = {
            "scheme": {"names": ["p1"]},
            "assets": [{"label": "A", "values": [1]}],
            "threats": [{"label": "C", "values": [0]}],
            "rule": "bogus",
        }
        with pytest.raises(DocumentError):
            parse_scenario_document(doc)

    def test_entropy_config_parses(self):
        doc = {
            "scheme": {"names": ["p1", "p2"]},
            "assets": [{"label": "A", "values": [0.5, 0.5]}],
            "threats": [{"label": "C", "values": [0.25, 0.5]}],
            "entropy": {"costs": [1, 2], "probability_floor": 1e-6,
                        "cost_from_scheme": True},
        }
        parsed = parse_scenario_document(doc)
        assert parsed.entropy.costs == (1.0, 2.0)
        assert parsed.entropy.probability_floor == 1e-6
        assert parsed.entropy.cost_from_scheme

    def test_not_an_object(self):
        with pytest.raises(DocumentError):
            parse_scenario_document([1, 2, 3])

    @pytest.mark.parametrize("broken", [
        {"scheme": {"names": "p1p2"}},
        {"scheme": {"names": ["p1"]}, "assets": {"label": "A"}},
        {"scheme": {"names": ["p1"]}, "assets": [{"label": "A", "values": [1]}],
         "threats": [{"label": "C", "values": [0]}], "overrides": [1, 2]},
        {"scheme": {"names": ["p1"]}, "assets": [{"label": "A", "values": [1]}],
         "threats": [{"label": "C", "values": [0]}],
         "timeline": {"periods": 1, "pp": {"C": 0.5}}},
        {"scheme": {"names": ["p1"]}, "assets": [{"label": "A", "values": [1]}],
         "threats": [{"label": "C", "values": [0]}],
         "timeline": {"periods": "two", "pp": {"C": [0.5]}}},
        {"scheme": {"names": ["p1"]}, "assets": [{"label": "A", "values": {"p": 1}}],
         "threats": [{"label": "C", "values": [0]}]},
    ])
    def test_malformed_shapes_raise_document_errors(self, broken):
        with pytest.raises(DocumentError):
            parse_scenario_document(broken)


class TestIntervalCoding:
    def test_bounded(self):
        assert interval_to_json(Interval(0.25, 0.5)) == [0.25, 0.5]
        assert interval_from_json([0.25, 0.5]) == Interval(0.25, 0.5)

    def test_unbounded_sentinels(self):
        assert interval_to_json(Interval(0.5, math.inf)) == [0.5, "inf"]
        assert interval_from_json([0.5, "inf"]) == Interval(0.5, math.inf)
        assert interval_to_json(Interval(-math.inf, 2.0)) == ["-inf", 2.0]
        assert interval_from_json(["-inf", "inf"]) == Interval(-math.inf, math.inf)

    def test_empty_is_null(self):
        assert interval_to_json(EMPTY) is None
        assert interval_from_json(None) is EMPTY

    def test_garbage_rejected(self):
        with pytest.raises(DocumentError):
            interval_from_json([1.0])
        with pytest.raises(DocumentError):
            interval_from_json([2.0, "wide"])
        with pytest.raises(DocumentError):
            interval_from_json([3.0, 1.0])


def _label(rng: random.Random) -> str:
    return "".join(rng.choices(string.ascii_uppercase, k=rng.randint(1, 3)))


def _labels(rng: random.Random, n: int) -> tuple[str, ...]:
    out: list[str] = []
    while len(out) < n:
        candidate = _label(rng)
        if candidate not in out:
            out.append(candidate)
    return tuple(out)


def random_matrix(rng: random.Random) -> PayoffMatrix:
    rows = _labels(rng, rng.randint(1, 4))
    cols = _labels(rng, rng.randint(1, 4))
    entries = [[rng.uniform(-3, 3) for _ in cols] for _ in rows]
    return PayoffMatrix(rows, cols, entries)


def random_interval_matrix(rng: random.Random) -> IntervalPayoffMatrix:
    rows = _labels(rng, rng.randint(1, 3))
    cols = _labels(rng, rng.randint(1, 3))
    entries = [
        [Interval(lo, lo + rng.uniform(0, 2))
         for lo in [rng.uniform(-3, 3) for _ in cols]]
        for _ in rows
    ]
    return IntervalPayoffMatrix(rows, cols, entries)


def random_solution(rng: random.Random) -> GameSolution:
    rows = _labels(rng, rng.randint(1, 4))
    cols = _labels(rng, rng.randint(1, 4))

    def strategy(n):
        raw = [rng.random() for _ in range(n)]
        total = sum(raw)
        probs = [v / total for v in raw]
        probs[-1] = 1.0 - sum(probs[:-1])
        return tuple(probs)

    pure = rng.random() < 0.5
    if pure:
        i, j = rng.randrange(len(rows)), rng.randrange(len(cols))
        row_strategy = tuple(1.0 if k == i else 0.0 for k in range(len(rows)))
        col_strategy = tuple(1.0 if k == j else 0.0 for k in range(len(cols)))
        saddle = (rows[i], cols[j])
    else:
        row_strategy, col_strategy, saddle = strategy(len(rows)), strategy(len(cols)), None
    trace = tuple(
        Elimination(line=rng.choice(["row", "column"]), label=_label(rng),
                    by=_label(rng), strict=rng.random() < 0.5)
        for _ in range(rng.randint(0, 3))
    )
    return GameSolution(
        value=rng.uniform(-2, 2),
        row_labels=rows,
        col_labels=cols,
        row_strategy=row_strategy,
        col_strategy=col_strategy,
        kind="pure" if pure else "mixed",
        saddle=saddle,
        trace=trace,
    )


def random_series(rng: random.Random) -> ValueSeries:
    n = rng.randint(1, 6)
    records = tuple(
        PeriodValue(period=i, value=rng.uniform(-2, 2),
                    kind=rng.choice(["pure", "mixed"]),
                    saddle=("A", "C") if rng.random() < 0.5 else None)
        for i in range(n)
    )
    return ValueSeries(rule=rng.choice(["diff", "entropy"]), records=records)


def random_whatif(rng: random.Random) -> WhatIfResult:
    realization = random_matrix(rng)
    baseline = rng.uniform(-2, 2)
    achieved = baseline + rng.uniform(0, 1)
    deviations = tuple(
        tuple(rng.uniform(-0.5, 0.5) for _ in realization.col_labels)
        for _ in realization.row_labels
    )
    return WhatIfResult(realization=realization, achieved=achieved,
                        baseline=baseline, delta=achieved - baseline,
                        deviations=deviations)


class TestResultRoundTrips:
    def test_hundred_random_results_round_trip(self):
        rng = random.Random(79)
        makers = {
            "payoff_matrix": (random_matrix, matrix_to_doc),
            "interval_payoff_matrix": (random_interval_matrix,
                                       interval_matrix_to_doc),
            "game_solution": (random_solution, solution_to_doc),
            "value_series": (random_series, series_to_doc),
            "whatif_result": (random_whatif, whatif_to_doc),
        }
        for i in range(100):
            name = list(makers)[i % len(makers)]
            make, encode = makers[name]
            original = make(rng)
            payload = json.dumps(encode(original))
            parsed = parse_result(json.loads(payload))
            assert parsed == original, name

    def test_unknown_type_rejected(self):
        with pytest.raises(DocumentError):
            parse_result({"type": "mystery"})
        with pytest.raises(DocumentError):
            parse_result({"no": "type"})
