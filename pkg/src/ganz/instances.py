"""Shipped certificate/valuation instances and seeded random generators."""

from __future__ import annotations

import random
from fractions import Fraction

from ganz.baer_krull import STANDARD_Q, baer_krull_order, build_semisection
from ganz.certificates import (
    SOS,
    AlgebraElem,
    ConeCert,
    LocalizedElem,
    RadicalCert,
    SetDescription,
)
from ganz.ovf_core import EPS, KElem
from ganz.parser import parse
from ganz.ratfunc import MPoly, RatFunc
from ganz.valuations import NearPoint, WeightedGauss


def sd(p=(), g=(), nvars=1) -> SetDescription:
    return SetDescription(
        tuple(parse(t, nvars) for t in p), tuple(parse(t, nvars) for t in g), nvars
    )


def _cone(mapping, nvars):
    return ConeCert.from_mapping(
        {J: SOS(tuple(parse(t, nvars) for t in parts)) for J, parts in mapping.items()}
    )


def _alg(mapping):
    return AlgebraElem.from_mapping(mapping)


def _loc(mapping, t_m=0, t_a=None):
    return LocalizedElem(_alg(mapping), KElem.coerce(t_m), _alg(t_a or {}))


def shipped_radical_certs():
    """``(name, SetDescription, RadicalCert)`` triples that verify Valid."""
    out = []
    s = sd()
    gen = _cone({(): ["x1"]}, 1)  # G = 1/(1 + x1^2)
    out.append((
        "x1/(1+x1^2)",
        s,
        RadicalCert(parse("x1/(1+x1^2)", 1), (gen,), (_loc({(1,): -1, (2,): 1}), _loc({}))),
    ))
    out.append(("1/(1+x1^2)", s, RadicalCert(parse("1/(1+x1^2)", 1), (gen,), (_loc({(1,): -1}),))))
    out.append((
        "localized G/(1+eps*G)",
        s,
        RadicalCert(parse("1/(1+x1^2+eps)", 1), (gen,), (_loc({(1,): -1}, EPS, {(1,): 1}),)),
    ))
    s2 = sd(["x1", "1-x1"])
    out.append((
        "1/(1+x1(1-x1))",
        s2,
        RadicalCert(parse("1/(1+x1*(1-x1))", 1), (_cone({(1, 2): ["1"]}, 1),), (_loc({(1,): -1}),)),
    ))
    s3 = sd(["x1"], ["x1^2"])
    out.append(("x1 with g=x1^2", s3, RadicalCert(parse("x1", 1), (), (_loc({(1,): -1}), _loc({})))))
    s4 = sd(["x1", "x2", "1-x1-x2"], nvars=2)
    out.append((
        "x1*x2/(1+x1*x2)",
        s4,
        RadicalCert(
            parse("x1*x2/(1+x1*x2)", 2), (_cone({(1, 2): ["1"]}, 2),), (_loc({(0,): -1, (1,): 1}),)
        ),
    ))
    return out


def pipeline_instances():
    return [
        ("(a) WeightedGauss w=1, p=(x1, x1^2+eps^3)", WeightedGauss((1,)), sd(["x1", "x1^2+eps^3"])),
        ("(b) NearPoint b=0 d=1, p=(x1)", NearPoint((0,), (1,)), sd(["x1"])),
        ("(c) WeightedGauss w=(1,0), p=(x1, x2, x1*x2)", WeightedGauss((1, 0)), sd(["x1", "x2", "x1*x2"], nvars=2)),
    ]


def semisection_instances():
    np_ = NearPoint((0,), (1,))
    wg = WeightedGauss((1, 0))
    return [
        ("NearPoint b=0 d=1, forced x1", build_semisection(np_, [((1, 0), parse("x1", 1))])),
        ("WeightedGauss w=(1,0), forced x1", build_semisection(wg, [((1,), parse("x1", 2))])),
    ]


def k_sign_flip_order():
    """The order on K with eps negative, from the semi-section n -> (-eps)^n."""
    v = WeightedGauss(())
    s = build_semisection(v, [((1,), RatFunc.const(-EPS, 0))])
    return baer_krull_order(v, s, STANDARD_Q)


# random generators -------------------------------------------------------------


def random_rational(rng: random.Random, size: int = 9) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, size))


def random_kelem(rng: random.Random, nonzero: bool = False) -> KElem:
    while True:
        num = [rng.randint(-5, 5) for _ in range(rng.randint(1, 3))]
        den = [rng.randint(-5, 5) for _ in range(rng.randint(1, 2))]
        if not any(den):
            continue
        a = KElem(tuple(num), tuple(den)) * KElem.eps(rng.randint(-2, 2))
        if a or not nonzero:
            return a


def random_coefficient(rng: random.Random) -> KElem:
    """Mostly rational, sometimes carrying a power of eps."""
    q = KElem.coerce(random_rational(rng, 5))
    r = rng.random()
    if r < 0.25:
        return q * KElem.eps(rng.randint(-1, 2))
    if r < 0.4:
        return q + KElem.eps(rng.randint(1, 2))
    return q


def random_mpoly(rng: random.Random, nvars: int, degree: int = 2, terms: int = 3) -> MPoly:
    out = {}
    for _ in range(terms):
        e = [0] * nvars
        for _ in range(rng.randint(0, degree)):
            e[rng.randrange(nvars)] += 1
        out[tuple(e)] = random_coefficient(rng)
    return MPoly(nvars, out)


def random_ratfunc(rng: random.Random, nvars: int, nonzero: bool = True) -> RatFunc:
    while True:
        num = random_mpoly(rng, nvars, 2, rng.randint(1, 3))
        den = random_mpoly(rng, nvars, 1, rng.randint(1, 2))
        if den and (num or not nonzero):
            return RatFunc(num, den)


def random_point(rng: random.Random, nvars: int) -> tuple:
    out = []
    for _ in range(nvars):
        q = KElem.coerce(random_rational(rng, 6))
        r = rng.random()
        if r < 0.3:
            q = q + KElem.coerce(random_rational(rng, 3)) * KElem.eps(rng.choice((1, 2, -1)))
        out.append(q)
    return tuple(out)


def random_cone_cert(rng: random.Random, s: SetDescription) -> ConeCert:
    m = len(s.p)
    mapping = {}
    for _ in range(rng.randint(1, 3)):
        J = tuple(i + 1 for i in range(m) if rng.random() < 0.5)
        parts = []
        for _ in range(rng.randint(1, 2)):
            q = RatFunc(random_mpoly(rng, s.nvars, 1, rng.randint(1, 2)))
            if rng.random() < 0.2:
                den = random_mpoly(rng, s.nvars, 1, 2)
                if den:
                    q = q / RatFunc(den)
            if q:
                parts.append(q)
        if parts:
            mapping.setdefault(J, []).extend(parts)
    if not mapping:
        mapping[()] = [RatFunc.const(1, s.nvars)]
    return ConeCert.from_mapping(mapping)


def random_algebra_elem(rng: random.Random, nsym: int) -> AlgebraElem:
    terms = {}
    for _ in range(rng.randint(1, 3)):
        e = tuple(rng.randint(0, 2) for _ in range(nsym))
        c = KElem.coerce(random_rational(rng, 4)) * KElem.eps(rng.randint(0, 2))
        terms[e] = c
    return AlgebraElem.from_mapping(terms)


def random_radical_cert(rng: random.Random, s: SetDescription) -> RadicalCert:
    gens = tuple(random_cone_cert(rng, s) for _ in range(rng.randint(0, 2)))
    nsym = len(gens) + len(s.g)
    coeffs = []
    for _ in range(rng.randint(1, 3)):
        t_m = KElem.eps(rng.randint(1, 3)) * KElem.coerce(random_rational(rng, 3)) if rng.random() < 0.5 else KElem.coerce(0)
        coeffs.append(LocalizedElem(random_algebra_elem(rng, nsym), t_m, random_algebra_elem(rng, nsym)))
    return RadicalCert(random_ratfunc(rng, s.nvars), gens, tuple(coeffs))
