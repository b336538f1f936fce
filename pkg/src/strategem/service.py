"""HTTP service exposing the solver over a flat-directory scenario store.

Endpoints:
  PUT  /scenarios/{id}                 upload and validate a document
  GET  /scenarios/{id}                 fetch the stored document
  POST /scenarios/{id}/build           query: rule (payoff matrix only)
  POST /scenarios/{id}/solve           query: rule, dominance
  POST /scenarios/{id}/whatif          body: {entry, delta} or {budget, step}
  GET  /scenarios/{id}/timeline        query: rule, dominance

Responses are the same JSON documents the CLI emits in machine format.
400 marks invalid documents, 404 unknown ids, 422 a rule or scale that
does not fit the stored scenario.  Writes are atomic and computations
pure, so concurrent requests are safe.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlsplit

from .docio import (
    dump_document,
    interval_matrix_to_doc,
    matrix_to_doc,
    parse_scenario_document,
    sensitivity_to_doc,
    series_to_doc,
    solution_to_doc,
    whatif_to_doc,
)
from .errors import (
    DocumentError,
    ScaleError,
    SizeError,
    StepError,
    StrategemError,
    TimelineError,
)
from .payoff import IntervalPayoffMatrix, build_matrix
from .solver import Dominance, interval_game_bounds, solve
from .whatif import optimize_within_intervals, sensitivity, timeline_values

_ID_PATTERN = re.compile(r"^[A-Za-z0-9][A-Za-z0-9._-]*$")


class ScenarioStore:
    """Flat directory of scenario documents keyed by id."""

    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, scenario_id: str) -> str:
        if not _ID_PATTERN.match(scenario_id):
            raise DocumentError(f"invalid scenario id {scenario_id!r}")
        return os.path.join(self.directory, f"{scenario_id}.json")

    def put(self, scenario_id: str, document: dict) -> None:
        path = self._path(scenario_id)
        fd, temp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                json.dump(document, handle, indent=2)
            os.replace(temp, path)
        except BaseException:
            if os.path.exists(temp):
                os.unlink(temp)
            raise

    def get(self, scenario_id: str) -> dict | None:
        path = self._path(scenario_id)
        if not os.path.exists(path):
            return None
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)


class _Handler(BaseHTTPRequestHandler):
    server_version = "strategem"
    store: ScenarioStore  # set by make_server
    quiet = True

    # -- plumbing ----------------------------------------------------------

    def log_message(self, fmt, *args):
        if not self.quiet:
            super().log_message(fmt, *args)

    def _send(self, status: int, payload: dict) -> None:
        body = dump_document(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self._cors()
        self.end_headers()
        self.wfile.write(body)

    def _cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, PUT, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")

    def _error(self, status: int, exc_or_msg) -> None:
        if isinstance(exc_or_msg, Exception):
            payload = {"error": type(exc_or_msg).__name__, "detail": str(exc_or_msg)}
        else:
            payload = {"error": "Error", "detail": str(exc_or_msg)}
        self._send(status, payload)

    def _body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b""
        if not raw:
            return {}
        try:
            parsed = json.loads(raw.decode("utf-8"))
        except (json.JSONDecodeError, UnicodeDecodeError) as exc:
            raise DocumentError(f"request body is not valid JSON: {exc}") from exc
        if not isinstance(parsed, dict):
            raise DocumentError("request body must be a JSON object")
        return parsed

    def _route(self):
        parts = urlsplit(self.path)
        segments = [s for s in parts.path.split("/") if s]
        query = {k: v[-1] for k, v in parse_qs(parts.query).items()}
        return segments, query

    def _stored_document(self, scenario_id: str) -> dict | None:
        document = self.store.get(scenario_id)
        if document is None:
            self._error(404, f"no scenario stored under {scenario_id!r}")
            return None
        return document

    # -- verbs -------------------------------------------------------------

    def do_OPTIONS(self):
        self.send_response(204)
        self._cors()
        self.end_headers()

    def do_PUT(self):
        segments, _ = self._route()
        try:
            if len(segments) != 2 or segments[0] != "scenarios":
                self._error(404, f"unknown path {self.path}")
                return
            document = self._body()
            parse_scenario_document(document)  # reject invalid uploads
            self.store.put(segments[1], document)
            self._send(200, {"id": segments[1], "stored": True})
        except StrategemError as exc:
            self._error(400, exc)

    def do_GET(self):
        segments, query = self._route()
        try:
            if len(segments) >= 2 and segments[0] == "scenarios":
                document = self._stored_document(segments[1])
                if document is None:
                    return
                if len(segments) == 2:
                    self._send(200, document)
                    return
                if len(segments) == 3 and segments[2] == "timeline":
                    self._timeline(document, query)
                    return
            self._error(404, f"unknown path {self.path}")
        except (ScaleError, TimelineError) as exc:
            self._error(422, exc)
        except StrategemError as exc:
            self._error(400, exc)

    def do_POST(self):
        segments, query = self._route()
        try:
            if len(segments) == 3 and segments[0] == "scenarios":
                document = self._stored_document(segments[1])
                if document is None:
                    return
                if segments[2] == "build":
                    self._build(document, query)
                    return
                if segments[2] == "solve":
                    self._solve(document, query)
                    return
                if segments[2] == "whatif":
                    self._whatif(document, query)
                    return
            self._error(404, f"unknown path {self.path}")
        except (ScaleError, TimelineError, StepError, SizeError) as exc:
            self._error(422, exc)
        except StrategemError as exc:
            self._error(400, exc)

    # -- commands ----------------------------------------------------------

    def _build(self, document: dict, query: dict) -> None:
        parsed = parse_scenario_document(document)
        rule = query.get("rule") or parsed.rule or "diff"
        matrix = build_matrix(parsed.scenario, rule, parsed.entropy)
        if isinstance(matrix, IntervalPayoffMatrix):
            self._send(200, interval_matrix_to_doc(matrix))
        else:
            self._send(200, matrix_to_doc(matrix))

    def _solve(self, document: dict, query: dict) -> None:
        parsed = parse_scenario_document(document)
        rule = query.get("rule") or parsed.rule or "diff"
        mode = Dominance(query.get("dominance") or "weak")
        matrix = build_matrix(parsed.scenario, rule, parsed.entropy)
        bounds = None
        if isinstance(matrix, IntervalPayoffMatrix):
            bounds = interval_game_bounds(matrix, mode)
            matrix = matrix.midpoint()
        solution = solve(matrix, mode)
        payload = solution_to_doc(solution)
        if bounds is not None:
            payload["value_bounds"] = list(bounds)
        self._send(200, payload)

    def _whatif(self, document: dict, query: dict) -> None:
        parsed = parse_scenario_document(document)
        body = self._body()
        mode = Dominance(body.get("dominance") or query.get("dominance") or "weak")
        rule = body.get("rule") or query.get("rule") or parsed.rule or "diff"

        if "entry" in body:
            entry = body["entry"]
            if (not isinstance(entry, (list, tuple))) or len(entry) != 2:
                raise DocumentError("whatif entry must be a [row, col] pair")
            delta = body.get("delta")
            if not isinstance(delta, (int, float)) or isinstance(delta, bool):
                raise DocumentError("whatif with an entry needs a numeric delta")
            matrix = build_matrix(parsed.scenario, rule, parsed.entropy)
            if isinstance(matrix, IntervalPayoffMatrix):
                matrix = matrix.midpoint()
            baseline = solve(matrix, mode).value
            solution, change = sensitivity(matrix, str(entry[0]), str(entry[1]),
                                           float(delta), mode)
            self._send(200, sensitivity_to_doc(
                (str(entry[0]), str(entry[1])), float(delta), baseline,
                solution, change))
            return

        budget = body.get("budget")
        if budget is not None and (isinstance(budget, bool)
                                   or not isinstance(budget, (int, float))):
            raise DocumentError("budget must be a number")
        step = body.get("step", 0.01)
        if isinstance(step, bool) or not isinstance(step, (int, float)):
            raise DocumentError("step must be a number")
        matrix = build_matrix(parsed.scenario, "interval", parsed.entropy)
        result = optimize_within_intervals(
            matrix,
            budget=float(budget) if budget is not None else None,
            step=float(step),
            mode=mode,
        )
        self._send(200, whatif_to_doc(result))

    def _timeline(self, document: dict, query: dict) -> None:
        parsed = parse_scenario_document(document)
        rule = query.get("rule") or parsed.rule or "diff"
        if rule == "interval":
            raise ScaleError("timeline analysis supports diff or entropy rules")
        mode = Dominance(query.get("dominance") or "weak")
        series = timeline_values(parsed.scenario, rule, parsed.entropy, mode)
        self._send(200, series_to_doc(series))


def make_server(port: int, store_dir: str,
                quiet: bool = True) -> ThreadingHTTPServer:
    store = ScenarioStore(store_dir)
    handler = type("BoundHandler", (_Handler,), {"store": store, "quiet": quiet})
    return ThreadingHTTPServer(("", port), handler)


def serve(port: int, store_dir: str) -> None:
    """Run the service until interrupted."""
    server = make_server(port, store_dir, quiet=False)
    host, bound_port = server.server_address[:2]
    print(f"strategem service on http://{host or 'localhost'}:{bound_port} "
          f"(store: {store_dir})")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
