"""Real-valued overlap functions and aggregation functions on [0, 1].

The catalog ships the standard examples used throughout the library: the
product, the minimum, the min-max power family, the product-power family and
a polynomial migrative example, plus the Lukasiewicz t-norm.  The last one is
deliberately *not* an overlap function (it has zero divisors) and is kept in
the catalog as the stock counterexample for the zero-boundary axiom.

Axiom verification is a separate, named operation: registering a function
never implies it passes anything.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .sampling import (
    CONTINUITY_STAGES,
    REAL_GRID,
    SampleGrid,
    SampledResult,
    continuity_probe,
    max_jump_nary,
)

__all__ = [
    "RealOverlap",
    "RealAggregator",
    "OverlapError",
    "builtin_overlaps",
    "lattice_join",
    "lattice_meet",
    "convex_sum",
    "real_owa",
    "verify_overlap_axioms",
    "pointwise_leq",
    "projection_aggregator",
    "mean_of_components",
]

WEIGHT_TOLERANCE = 1e-12


class OverlapError(ValueError):
    """A construction precondition failed."""


@dataclass(frozen=True, eq=False)
class RealOverlap:
    """A named binary function on [0,1] with the axioms it claims to satisfy.

    Claims are metadata; `verify_overlap_axioms` is the arbiter.
    """

    fn: Callable[[float, float], float]
    name: str
    claims: frozenset[str] = field(default_factory=frozenset)

    def __call__(self, x: float, y: float) -> float:
        return self.fn(x, y)

    def claims_overlap(self) -> bool:
        return {"go1", "go2", "go3", "go4", "go5"} <= self.claims


@dataclass(frozen=True, eq=False)
class RealAggregator:
    """An n-ary aggregation function on [0,1] with claimed side properties."""

    fn: Callable[..., float]
    arity: int
    name: str
    claims: frozenset[str] = field(default_factory=frozenset)

    def __call__(self, *xs: float) -> float:
        if len(xs) != self.arity:
            raise OverlapError(f"{self.name} expects {self.arity} arguments, got {len(xs)}")
        return self.fn(*xs)


def _int_power(t: float, p: int) -> float:
    # Repeated multiplication keeps the rounding monotone and the grid
    # comparisons in GO4 exact.
    r = t
    for _ in range(p - 1):
        r *= t
    return r


def _minmax(p: int) -> Callable[[float, float], float]:
    def fn(x: float, y: float) -> float:
        return min(x, y) * max(_int_power(x, p), _int_power(y, p))

    return fn


def _product_power(p: int) -> Callable[[float, float], float]:
    def fn(x: float, y: float) -> float:
        return _int_power(x * y, p)

    return fn


def _half_sum_poly(x: float, y: float) -> float:
    t = x * y
    return 0.5 * (t + t * t)


def _lukasiewicz(x: float, y: float) -> float:
    # Evaluated as max(0, min(x-(1-y), y-(1-x))) rather than max(0, x+y-1):
    # the symmetrized form stays exactly commutative and exactly below
    # min(x, y) in binary64, which the naive sum does not.
    return max(0.0, min(x - (1.0 - y), y - (1.0 - x)))


_GO_ALL = frozenset({"go1", "go2", "go3", "go4", "go5"})


def builtin_overlaps() -> dict[str, RealOverlap]:
    """The catalog of real binary functions, addressable by string id."""
    entries = [
        RealOverlap(lambda x, y: x * y, "product",
                    _GO_ALL | {"migrative", "homogeneous:2", "neutral-1", "associative"}),
        RealOverlap(lambda x, y: min(x, y), "min",
                    _GO_ALL | {"homogeneous:1", "neutral-1", "associative"}),
        RealOverlap(_minmax(1), "minmax:p=1",
                    _GO_ALL | {"migrative", "homogeneous:2", "neutral-1", "associative"}),
        RealOverlap(_minmax(2), "minmax:p=2", _GO_ALL | {"homogeneous:3", "neutral-1"}),
        RealOverlap(_minmax(3), "minmax:p=3", _GO_ALL | {"homogeneous:4", "neutral-1"}),
        RealOverlap(_product_power(2), "xyp:p=2", _GO_ALL | {"migrative", "homogeneous:4"}),
        RealOverlap(_product_power(3), "xyp:p=3", _GO_ALL | {"migrative", "homogeneous:6"}),
        RealOverlap(_half_sum_poly, "mig:poly", _GO_ALL | {"migrative"}),
        # Not an overlap: it has zero divisors, e.g. value 0 at (0.5, 0.5).
        RealOverlap(_lukasiewicz, "lukasiewicz",
                    frozenset({"go1", "go3", "go4", "go5", "associative"})),
    ]
    return {g.name: g for g in entries}


def lattice_join(g1: RealOverlap, g2: RealOverlap) -> RealOverlap:
    """Pointwise maximum; overlaps are closed under it."""
    return RealOverlap(lambda x, y: max(g1.fn(x, y), g2.fn(x, y)),
                       f"join({g1.name},{g2.name})", g1.claims & g2.claims & _GO_ALL)


def lattice_meet(g1: RealOverlap, g2: RealOverlap) -> RealOverlap:
    """Pointwise minimum; overlaps are closed under it."""
    return RealOverlap(lambda x, y: min(g1.fn(x, y), g2.fn(x, y)),
                       f"meet({g1.name},{g2.name})", g1.claims & g2.claims & _GO_ALL)


def convex_sum(w1: float, w2: float, g1: RealOverlap, g2: RealOverlap) -> RealOverlap:
    """Pointwise convex combination w1*g1 + w2*g2; overlaps are closed under it."""
    if not (0.0 <= w1 <= 1.0 and 0.0 <= w2 <= 1.0):
        raise OverlapError("convex weights must lie in [0, 1]")
    if abs((w1 + w2) - 1.0) > WEIGHT_TOLERANCE:
        raise OverlapError(f"convex weights must sum to 1, got {w1 + w2!r}")
    return RealOverlap(lambda x, y: w1 * g1.fn(x, y) + w2 * g2.fn(x, y),
                       f"convex({w1!r}*{g1.name}+{w2!r}*{g2.name})",
                       g1.claims & g2.claims & _GO_ALL)


def real_owa(weights: Sequence[float], xs: Sequence[float]) -> float:
    """Ordered weighted average: weights applied to the inputs sorted descending."""
    if len(weights) != len(xs):
        raise OverlapError("weight and input lengths differ")
    if any(not (0.0 <= w <= 1.0) for w in weights):
        raise OverlapError("weights must lie in [0, 1]")
    if abs(math.fsum(weights) - 1.0) > WEIGHT_TOLERANCE:
        raise OverlapError(f"weights must sum to 1, got {math.fsum(weights)!r}")
    ordered = sorted(xs, reverse=True)
    return math.fsum(w * v for w, v in zip(weights, ordered))


# ---------------------------------------------------------------------------
# Axiom checks (GO1-GO5) on a point grid.
# ---------------------------------------------------------------------------


def check_commutative(g: RealOverlap, pts: Sequence[float]) -> SampledResult:
    count = 0
    for x in pts:
        for y in pts:
            count += 1
            if g.fn(x, y) != g.fn(y, x):
                return SampledResult(False, (x, y), count)
    return SampledResult(True, None, count)


def check_zero_boundary(g: RealOverlap, pts: Sequence[float]) -> SampledResult:
    """Biconditional: value 0 exactly on the zero set of the product."""
    count = 0
    for x in pts:
        for y in pts:
            count += 1
            if (g.fn(x, y) == 0.0) != (x * y == 0.0):
                return SampledResult(False, (x, y), count)
    return SampledResult(True, None, count)


def check_one_boundary(g: RealOverlap, pts: Sequence[float]) -> SampledResult:
    """Biconditional: value 1 exactly where the product is 1."""
    count = 0
    for x in pts:
        for y in pts:
            count += 1
            if (g.fn(x, y) == 1.0) != (x * y == 1.0):
                return SampledResult(False, (x, y), count)
    return SampledResult(True, None, count)


def check_monotone(g: RealOverlap, pts: Sequence[float]) -> SampledResult:
    """Nondecreasing along adjacent grid steps in each argument."""
    count = 0
    for i in range(len(pts) - 1):
        for y in pts:
            count += 1
            if g.fn(pts[i], y) > g.fn(pts[i + 1], y):
                return SampledResult(False, (pts[i], pts[i + 1], y), count)
            if g.fn(y, pts[i]) > g.fn(y, pts[i + 1]):
                return SampledResult(False, (y, pts[i], pts[i + 1]), count)
    return SampledResult(True, None, count)


def verify_overlap_axioms(
    g: RealOverlap,
    grid: SampleGrid = REAL_GRID,
    stages: tuple[tuple[float, float], ...] = CONTINUITY_STAGES,
) -> dict[str, SampledResult]:
    pts = grid.endpoints()
    return {
        "go1": check_commutative(g, pts),
        "go2": check_zero_boundary(g, pts),
        "go3": check_one_boundary(g, pts),
        "go4": check_monotone(g, pts),
        "go5": continuity_probe(g.fn, stages),
    }


def pointwise_leq(g1: RealOverlap, g2: RealOverlap, pts: Sequence[float]) -> SampledResult:
    count = 0
    for x in pts:
        for y in pts:
            count += 1
            if g1.fn(x, y) > g2.fn(x, y):
                return SampledResult(False, (x, y, g1.fn(x, y), g2.fn(x, y)), count)
    return SampledResult(True, None, count)


def pointwise_equal(g1: RealOverlap, g2: RealOverlap, pts: Sequence[float]) -> SampledResult:
    count = 0
    for x in pts:
        for y in pts:
            count += 1
            if g1.fn(x, y) != g2.fn(x, y):
                return SampledResult(False, (x, y), count)
    return SampledResult(True, None, count)


# ---------------------------------------------------------------------------
# Four-ary aggregation helpers used by the eight-component construction.
# ---------------------------------------------------------------------------


def projection_aggregator(index: int, arity: int = 4) -> RealAggregator:
    """Aggregator picking its index-th argument (1-based)."""
    if not 1 <= index <= arity:
        raise OverlapError(f"projection index {index} out of range 1..{arity}")
    claims = {"m1", "m2", f"m3:arg{index}", f"m4:arg{index}"}
    if index > 2:
        claims.add("commutative-first-two")
    return RealAggregator(lambda *xs: xs[index - 1], arity, f"pick:{index}", frozenset(claims))


def mean_of_components(indices: Sequence[int], arity: int = 4) -> RealAggregator:
    """Aggregator averaging the given (1-based) argument positions."""
    idx = tuple(indices)
    if any(not 1 <= i <= arity for i in idx) or not idx:
        raise OverlapError(f"component indices {indices} out of range 1..{arity}")
    claims = {"m1", "m2"}
    claims.update(f"m3:arg{i}" for i in idx)
    claims.update(f"m4:arg{i}" for i in idx)
    if all(i > 2 for i in idx):
        claims.add("commutative-first-two")
    name = "mean:" + "+".join(str(i) for i in idx)

    def fn(*xs: float) -> float:
        return math.fsum(xs[i - 1] for i in idx) / len(idx)

    return RealAggregator(fn, arity, name, frozenset(claims))


def check_m1_boundary(m: RealAggregator) -> SampledResult:
    zeros = (0.0,) * m.arity
    ones = (1.0,) * m.arity
    ok = m(*zeros) == 0.0 and m(*ones) == 1.0
    return SampledResult(ok, None if ok else (m(*zeros), m(*ones)), 2)


def check_m2_monotone(m: RealAggregator, step: float = 0.25) -> SampledResult:
    ok, where = _directional_decrease(m, step)
    samples = (SampleGrid(step).divisions + 1) ** m.arity
    return SampledResult(ok, where or None, samples)


def _directional_decrease(m: RealAggregator, step: float):
    pts = SampleGrid(step).endpoints()
    for args in itertools.product(pts, repeat=m.arity):
        base = m(*args)
        for j in range(m.arity):
            k = pts.index(args[j])
            if k + 1 < len(pts):
                moved = list(args)
                moved[j] = pts[k + 1]
                if m(*moved) < base:
                    return False, (args, j)
    return True, ()


def check_m3_component(m: RealAggregator, index: int, step: float = 0.25) -> SampledResult:
    """Value 0 forces the index-th argument (1-based) to be 0."""
    pts = SampleGrid(step).endpoints()
    count = 0
    for args in itertools.product(pts, repeat=m.arity):
        count += 1
        if m(*args) == 0.0 and args[index - 1] != 0.0:
            return SampledResult(False, args, count)
    return SampledResult(True, None, count)


def check_m4_component(m: RealAggregator, index: int, step: float = 0.25) -> SampledResult:
    """Value 1 forces the index-th argument (1-based) to be 1."""
    pts = SampleGrid(step).endpoints()
    count = 0
    for args in itertools.product(pts, repeat=m.arity):
        count += 1
        if m(*args) == 1.0 and args[index - 1] != 1.0:
            return SampledResult(False, args, count)
    return SampledResult(True, None, count)


def check_commutative_first_two(m: RealAggregator, step: float = 0.25) -> SampledResult:
    pts = SampleGrid(step).endpoints()
    count = 0
    for args in itertools.product(pts, repeat=m.arity):
        count += 1
        swapped = (args[1], args[0], *args[2:])
        if m(*args) != m(*swapped):
            return SampledResult(False, args, count)
    return SampledResult(True, None, count)


def check_nary_continuity(m: RealAggregator, step: float = 0.1) -> SampledResult:
    bound = 4.0 * step
    jump, where = max_jump_nary(m.fn, m.arity, step)
    ok = jump < bound
    samples = (SampleGrid(step).divisions + 1) ** m.arity
    return SampledResult(ok, None if ok else (*where, jump), samples)
