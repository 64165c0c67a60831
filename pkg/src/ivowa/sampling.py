"""Deterministic sample grids and the small result record shared by all
sampled law checks.

A check never answers with a bare boolean: a failing check carries the first
violating tuple it met, so counterexamples double as fixtures.  Enumeration
order is fixed, which makes every verdict and witness reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

from .intervals import Interval, leq_product, subseteq

SAMPLE_SEED = 20260808

# Two-stage slope probe used by the continuity heuristics: (step, max jump).
CONTINUITY_STAGES: tuple[tuple[float, float], ...] = ((0.05, 0.2), (0.005, 0.02))


class SampledResult(NamedTuple):
    ok: bool
    witness: tuple | None
    samples: int


@dataclass(frozen=True)
class SampleGrid:
    """Evenly spaced endpoint grid on [0, 1], boundaries always included.

    The step must be 1/n for an integer n so that grid points are generated
    as exact binary64 quotients i/n.
    """

    endpoint_step: float = 0.1

    def __post_init__(self) -> None:
        n = round(1.0 / self.endpoint_step)
        if n < 1 or abs(1.0 / n - self.endpoint_step) > 1e-12:
            raise ValueError(f"endpoint_step must be 1/n, got {self.endpoint_step}")

    @property
    def divisions(self) -> int:
        return round(1.0 / self.endpoint_step)

    def endpoints(self) -> list[float]:
        n = self.divisions
        return [i / n for i in range(n + 1)]

    def intervals(self) -> list[Interval]:
        """All valid intervals with endpoints on the grid, ascending lexicographic."""
        pts = self.endpoints()
        return [Interval(a, b) for i, a in enumerate(pts) for b in pts[i:]]

    def degenerates(self) -> list[Interval]:
        return [Interval(a, a) for a in self.endpoints()]


DEFAULT_GRID = SampleGrid(0.1)
REAL_GRID = SampleGrid(0.05)


def nested_pairs(intervals: Sequence[Interval]) -> list[tuple[Interval, Interval]]:
    """All (inner, outer) pairs with inner a subset of outer."""
    return [(a, b) for a in intervals for b in intervals if subseteq(a, b)]


def comparable_pairs(intervals: Sequence[Interval]) -> list[tuple[Interval, Interval]]:
    """All (x, y) pairs with x <= y in the product order."""
    return [(a, b) for a in intervals for b in intervals if leq_product(a, b)]


def interior_intervals(intervals: Sequence[Interval]) -> list[Interval]:
    return [x for x in intervals if 0.0 < x.lower and x.upper < 1.0]


def tuple_samples(
    items: Sequence,
    n: int,
    budget: int = 300_000,
    seed: int = SAMPLE_SEED,
) -> list[tuple]:
    """Deterministic n-tuples over items: the full cross product when it fits
    the budget, otherwise structured corner tuples plus a seeded random fill.
    """
    if len(items) ** n <= budget:
        return list(itertools.product(items, repeat=n))
    out: list[tuple] = [(c,) * n for c in items]
    bottom, top = items[0], items[-1]
    for c in (items[0], items[len(items) // 2], items[-1]):
        for j in range(n):
            for special in (top, bottom):
                t = [c] * n
                t[j] = special
                out.append(tuple(t))
    rng = random.Random(seed)
    while len(out) < budget:
        out.append(tuple(rng.choice(items) for _ in range(n)))
    return out


def max_jump_unary(fn: Callable[[float], float], step: float) -> tuple[float, tuple]:
    pts = SampleGrid(step).endpoints()
    worst, where = 0.0, ()
    prev = fn(pts[0])
    for i in range(1, len(pts)):
        cur = fn(pts[i])
        jump = abs(cur - prev)
        if jump > worst:
            worst, where = jump, (pts[i - 1], pts[i])
        prev = cur
    return worst, where


def max_jump_binary(fn: Callable[[float, float], float], step: float) -> tuple[float, tuple]:
    pts = SampleGrid(step).endpoints()
    rows = [[fn(x, y) for y in pts] for x in pts]
    worst, where = 0.0, ()
    m = len(pts)
    for i in range(m):
        for j in range(m):
            v = rows[i][j]
            if i + 1 < m:
                jump = abs(rows[i + 1][j] - v)
                if jump > worst:
                    worst, where = jump, (pts[i], pts[i + 1], pts[j])
            if j + 1 < m:
                jump = abs(rows[i][j + 1] - v)
                if jump > worst:
                    worst, where = jump, (pts[i], pts[j], pts[j + 1])
    return worst, where


def continuity_probe(
    fn: Callable[[float, float], float],
    stages: tuple[tuple[float, float], ...] = CONTINUITY_STAGES,
) -> SampledResult:
    """Grid-jump continuity heuristic for a binary function on [0, 1]^2.

    A bounded jump between adjacent grid points is evidence of continuity,
    never a proof; a steep but continuous function can trip the probe.
    """
    total = 0
    for step, bound in stages:
        n = SampleGrid(step).divisions
        total += 2 * n * (n + 1)
        jump, where = max_jump_binary(fn, step)
        if jump >= bound:
            return SampledResult(False, (*where, jump), total)
    return SampledResult(True, None, total)


def max_jump_nary(fn: Callable[..., float], arity: int, step: float) -> tuple[float, tuple]:
    pts = SampleGrid(step).endpoints()
    worst, where = 0.0, ()
    for args in itertools.product(pts, repeat=arity):
        base = fn(*args)
        for j in range(arity):
            k = pts.index(args[j])
            if k + 1 < len(pts):
                moved = list(args)
                moved[j] = pts[k + 1]
                jump = abs(fn(*moved) - base)
                if jump > worst:
                    worst, where = jump, (args, j)
    return worst, where
