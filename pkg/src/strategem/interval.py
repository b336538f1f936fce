"""Closed-interval arithmetic with extended endpoints and an empty value.

Subtraction pairs the lower endpoint with the opposing upper endpoint,
multiplication takes the extremes of the four endpoint products, and
division multiplies by a reciprocal whose case analysis distinguishes
zero-free intervals, intervals touching zero from one side, intervals
spanning zero, and the degenerate [0, 0] whose reciprocal is empty.

Endpoint arithmetic is plain double precision without directed rounding;
0 * inf is taken as 0 so that point zeros annihilate unbounded factors.
"""

from __future__ import annotations

import math

from .errors import EmptyOperandError

INF = math.inf


class Interval:
    """Closed interval [lo, hi]; endpoints may be -inf / +inf.

    The distinguished empty interval is the module-level ``EMPTY``
    singleton; it never appears as an endpoint pair of a regular
    instance.  Instances are treated as immutable values.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float):
        lo = float(lo)
        hi = float(hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("interval endpoints must not be NaN")
        if lo > hi:
            raise ValueError(f"lower endpoint {lo!r} exceeds upper endpoint {hi!r}")
        if lo == INF or hi == -INF:
            raise ValueError("interval cannot degenerate to a point at infinity")
        # canonicalize signed zeros so reprs and comparisons stay tidy
        self.lo = lo + 0.0 if lo != 0.0 else 0.0
        self.hi = hi + 0.0 if hi != 0.0 else 0.0

    @classmethod
    def point(cls, value: float) -> "Interval":
        return cls(value, value)

    @property
    def is_empty(self) -> bool:
        return self is EMPTY

    @property
    def is_bounded(self) -> bool:
        return not self.is_empty and math.isfinite(self.lo) and math.isfinite(self.hi)

    @property
    def width(self) -> float:
        if self.is_empty:
            raise EmptyOperandError("the empty interval has no width")
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        if not self.is_bounded:
            raise EmptyOperandError("midpoint requires a bounded, non-empty interval")
        return (self.lo + self.hi) / 2.0

    def contains(self, value: float, tol: float = 0.0) -> bool:
        if self.is_empty:
            return False
        return self.lo - tol <= value <= self.hi + tol

    def encloses(self, other: "Interval") -> bool:
        """True when every point of `other` lies in this interval."""
        if other.is_empty:
            return True
        if self.is_empty:
            return False
        return self.lo <= other.lo and other.hi <= self.hi

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        if self is EMPTY or other is EMPTY:
            return self is other
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        if self is EMPTY:
            return hash("empty-interval")
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        if self is EMPTY:
            return "EMPTY"
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __add__(self, other: "Interval") -> "Interval":
        return add(self, other)

    def __sub__(self, other: "Interval") -> "Interval":
        return sub(self, other)

    def __mul__(self, other: "Interval") -> "Interval":
        return mul(self, other)

    def __truediv__(self, other: "Interval") -> "Interval":
        return div(self, other)


EMPTY = Interval.__new__(Interval)
EMPTY.lo = math.nan
EMPTY.hi = math.nan


def _need(x: Interval, side: str = "operand") -> None:
    if x.is_empty:
        raise EmptyOperandError(f"{side} is the empty interval")


def add(x: Interval, y: Interval) -> Interval:
    """[x] + [y] = [x.lo + y.lo, x.hi + y.hi]."""
    _need(x)
    _need(y)
    return Interval(x.lo + y.lo, x.hi + y.hi)


def sub(x: Interval, y: Interval) -> Interval:
    """[x] - [y] = [x.lo - y.hi, x.hi - y.lo]."""
    _need(x)
    _need(y)
    return Interval(x.lo - y.hi, x.hi - y.lo)


def _xmul(a: float, b: float) -> float:
    # 0 * inf taken as 0
    if a == 0.0 or b == 0.0:
        return 0.0
    return a * b


def mul(x: Interval, y: Interval) -> Interval:
    """Extremes of the four endpoint products; tolerates unbounded operands."""
    _need(x)
    _need(y)
    products = (
        _xmul(x.lo, y.lo),
        _xmul(x.lo, y.hi),
        _xmul(x.hi, y.lo),
        _xmul(x.hi, y.hi),
    )
    return Interval(min(products), max(products))


def recip(y: Interval) -> Interval:
    """Reciprocal 1/[y] with the full sign-case analysis.

    Returns EMPTY for [0, 0]; a bounded interval when 0 lies outside
    [y]; a half-line when [y] touches zero at one endpoint; and the
    whole real line when [y] spans zero.
    """
    _need(y)
    if y.lo == 0.0 and y.hi == 0.0:
        return EMPTY
    if y.lo > 0.0 or y.hi < 0.0:
        return Interval(1.0 / y.hi, 1.0 / y.lo)
    if y.lo == 0.0:
        return Interval(1.0 / y.hi, INF)
    if y.hi == 0.0:
        return Interval(-INF, 1.0 / y.lo)
    return Interval(-INF, INF)


def div(x: Interval, y: Interval) -> Interval:
    """[x] / [y] = [x] * (1/[y]); yields EMPTY (not an error) when [y] = [0, 0]."""
    _need(x, "dividend")
    r = recip(y)
    if r is EMPTY:
        return EMPTY
    return mul(x, r)
