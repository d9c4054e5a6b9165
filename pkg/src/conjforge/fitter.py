"""Exact 2-variable bound fitting over the rationals.

Given integer points (x_r, y_r), find the line y = m*x + b with every point
on the bounded side, maximizing the number of exact equality touches, then
minimizing total slack. The optimum of this 2-variable LP lies at a vertex
where two constraints are active, so candidate enumeration over point pairs
is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


class FitError(ValueError):
    pass


UPPER = "upper"
LOWER = "lower"
DIRECTIONS = (UPPER, LOWER)


@dataclass(frozen=True)
class BoundingFunction:
    """y = m*x + b, bounding from `direction`."""

    m: Fraction
    b: Fraction
    direction: str

    def __post_init__(self):
        if self.direction not in DIRECTIONS:
            raise FitError(f"direction must be one of {DIRECTIONS}")
        object.__setattr__(self, "m", Fraction(self.m))
        object.__setattr__(self, "b", Fraction(self.b))

    def evaluate(self, x: int | Fraction) -> Fraction:
        return self.m * Fraction(x) + self.b

    def satisfied_by(self, x: int | Fraction, y: int | Fraction) -> bool:
        rhs = self.evaluate(x)
        return Fraction(y) <= rhs if self.direction == UPPER else Fraction(y) >= rhs


@dataclass(frozen=True)
class FitResult:
    bound: BoundingFunction
    touch_count: int
    touch_set: frozenset[int]
    slack_total: Fraction


Point = tuple[int, int]


def enumerate_candidates(
    points: Iterable[Point], direction: str
) -> list[tuple[Fraction, Fraction]]:
    """All lines through pairs of points with distinct x, plus the constant
    line through the extreme y. Feasibility is not checked here."""
    pts = sorted(set(points))
    candidates: set[tuple[Fraction, Fraction]] = set()
    ys = [y for _, y in pts]
    extreme = max(ys) if direction == UPPER else min(ys)
    candidates.add((Fraction(0), Fraction(extreme)))
    for i in range(len(pts)):
        x1, y1 = pts[i]
        for j in range(i + 1, len(pts)):
            x2, y2 = pts[j]
            if x1 == x2:
                continue
            m = Fraction(y2 - y1, x2 - x1)
            b = Fraction(y1) - m * x1
            candidates.add((m, b))
    return sorted(candidates)


def _objective(
    points: list[Point], m: Fraction, b: Fraction, direction: str
) -> tuple[int, Fraction] | None:
    """(touch_count, slack_total) if the line is feasible, else None."""
    touch = 0
    slack = Fraction(0)
    for x, y in points:
        rhs = m * x + b
        diff = rhs - y if direction == UPPER else Fraction(y) - rhs
        if diff < 0:
            return None
        if diff == 0:
            touch += 1
        slack += diff
    return touch, slack


def fit_constant(points: list[Point], direction: str) -> FitResult:
    """Degenerate fit when all x coincide: horizontal line through the
    extreme y."""
    if not points:
        raise FitError("empty point list")
    ys = [y for _, y in points]
    extreme = max(ys) if direction == UPPER else min(ys)
    touch = frozenset(i for i, (_, y) in enumerate(points) if y == extreme)
    slack = sum((Fraction(abs(extreme - y)) for y in ys), Fraction(0))
    return FitResult(
        bound=BoundingFunction(Fraction(0), Fraction(extreme), direction),
        touch_count=len(touch),
        touch_set=touch,
        slack_total=slack,
    )


def fit(points: list[Point], direction: str) -> FitResult:
    """Optimal sharp bound under the lexicographic objective:
    max touches, min total slack, then min |m|, min |b|, min m."""
    if direction not in DIRECTIONS:
        raise FitError(f"direction must be one of {DIRECTIONS}")
    if not points:
        raise FitError("empty point list")
    if len({x for x, _ in points}) == 1:
        return fit_constant(points, direction)

    pts = list(points)
    best: tuple | None = None
    best_line: tuple[Fraction, Fraction] | None = None
    for m, b in enumerate_candidates(pts, direction):
        obj = _objective(pts, m, b, direction)
        if obj is None:
            continue
        touch, slack = obj
        key = (-touch, slack, abs(m), abs(b), m)
        if best is None or key < best:
            best = key
            best_line = (m, b)
    assert best_line is not None  # the constant candidate is always feasible
    m, b = best_line
    bound = BoundingFunction(m, b, direction)
    touch_set = frozenset(
        i for i, (x, y) in enumerate(pts) if m * x + b == y
    )
    return FitResult(
        bound=bound,
        touch_count=len(touch_set),
        touch_set=touch_set,
        slack_total=best[1],
    )
