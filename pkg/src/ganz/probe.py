"""Sampling-based refutation of integrality and boundedness.

On the open sets handled here a function is integral in the strong sense
exactly when every defined value it takes has nonnegative valuation, so one
sampled point with a negative-valuation value is a sound disproof.  Finding
no such point proves nothing.  Coordinates may carry powers of eps (including
negative powers) so that infinitesimal and infinite points get sampled.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from ganz.certificates import SetDescription
from ganz.errors import NotDefinedAt
from ganz.ovf_core import INF, KElem, ValGroupElem
from ganz.ratfunc import RatFunc


@dataclass(frozen=True)
class Grid:
    step: Fraction
    radius: Fraction


@dataclass(frozen=True)
class Pseudorandom:
    seed: int
    count: int


@dataclass(frozen=True)
class SampleStrategy:
    kind: Grid | Pseudorandom
    epsilon_orders: tuple = ()


@dataclass(frozen=True)
class Samples:
    points: list
    nonemptiness_unknown: bool


def _grid_values(strat: SampleStrategy) -> list:
    g = strat.kind
    step, radius = Fraction(g.step), Fraction(g.radius)
    if step <= 0:
        raise ValueError("grid step must be positive")
    k = int(radius // step)
    base = [KElem.coerce(i * step) for i in range(-k, k + 1)]
    out = list(base)
    for e in strat.epsilon_orders:
        pe = KElem.eps(e)
        for q in base:
            out.append(q + pe)
            out.append(q - pe)
    return out


def _random_coordinate(rng: random.Random, orders) -> KElem:
    kind = rng.random()
    num = rng.randint(-12, 12)
    den = rng.randint(1, 6)
    q = KElem.coerce(Fraction(num, den))
    if not orders or kind < 0.3:
        return q
    e = KElem.eps(rng.choice(orders)) * KElem.coerce(Fraction(rng.randint(-6, 6) or 1, rng.randint(1, 4)))
    if kind < 0.6:
        return e
    return q + e


def _iter_candidates(n: int, strat: SampleStrategy):
    if isinstance(strat.kind, Grid):
        vals = _grid_values(strat)
        yield from product(vals, repeat=n)
        return
    rng = random.Random(strat.kind.seed)
    orders = tuple(strat.epsilon_orders)
    for _ in range(100 * max(strat.kind.count, 1)):
        yield tuple(_random_coordinate(rng, orders) for _ in range(n))


def sample_set(s: SetDescription, strat: SampleStrategy) -> Samples:
    """Points of S in deterministic enumeration order."""
    limit = strat.kind.count if isinstance(strat.kind, Pseudorandom) else None
    pts = []
    for b in _iter_candidates(s.nvars, strat):
        if s.contains(b):
            pts.append(b)
            if limit is not None and len(pts) >= limit:
                break
    return Samples(pts, not pts)


@dataclass(frozen=True)
class Violation:
    witness: tuple
    value: KElem
    val: ValGroupElem


@dataclass(frozen=True)
class ProbeReport:
    violation: Violation | None
    tested: int
    skipped_undefined: int
    nonemptiness_unknown: bool = False
    note: str = field(default="sampling is incomplete: no violation found proves nothing")

    @property
    def verdict(self) -> str:
        return "Violation" if self.violation else "NoViolationFound"


def _probe(h: RatFunc, s: SetDescription, strat: SampleStrategy, bound: int) -> ProbeReport:
    samples = sample_set(s, strat)
    tested = skipped = 0
    for b in samples.points:
        try:
            value = h.eval(b)
        except NotDefinedAt:
            skipped += 1
            continue
        tested += 1
        v = value.valuation()
        if v is not INF and v < bound:
            return ProbeReport(Violation(b, value, ValGroupElem((v,))), tested, skipped)
    return ProbeReport(None, tested, skipped, samples.nonemptiness_unknown)


def integrality_probe(h: RatFunc, s: SetDescription, strat: SampleStrategy) -> ProbeReport:
    return _probe(h, s, strat, 0)


def boundedness_probe(h: RatFunc, a, s: SetDescription, strat: SampleStrategy) -> ProbeReport:
    """Look for ``h(b)`` outside the closed ball of radius ``v(a)``."""
    a = KElem.coerce(a)
    if not a:
        raise ValueError("bound must be nonzero")
    return _probe(h, s, strat, a.valuation())


def convex_hull_Z_check(value) -> bool:
    """In Q(eps) the convex hull of Z is exactly the valuation ring."""
    v = KElem.coerce(value).valuation()
    return v is INF or v >= 0
