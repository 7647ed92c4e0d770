"""Acceptance criteria, each an exact check returning a pass/fail line.

Shared by ``tests/test_acceptance.py`` and ``ganz selftest``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from ganz.baer_krull import sufficiency_pipeline
from ganz.certfile import dumps, loads
from ganz.certificates import (
    ConeCert,
    RadicalCert,
    cone_value,
    generator_value,
    handelman_search,
    verify_radical_cert,
)
from ganz.errors import DegenerateDirection, NotDefinedAt
from ganz.instances import (
    k_sign_flip_order,
    pipeline_instances,
    random_cone_cert,
    random_kelem,
    random_mpoly,
    random_point,
    random_radical_cert,
    random_ratfunc,
    sd,
    semisection_instances,
    shipped_radical_certs,
)
from ganz.ovf_core import EPS, INF, KElem, ValGroupElem
from ganz.parser import parse
from ganz.probe import Pseudorandom, SampleStrategy, integrality_probe, sample_set
from ganz.ratfunc import MPoly, RatFunc
from ganz.valuations import NearPoint, substitution_order_sign

SEED = 20240517
EPS_ORDERS = (1, 2, -1)


@dataclass
class Outcome:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d}. {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _fail_list(failures, limit=3):
    return "; ".join(failures[:limit])


def criterion_1():
    """Order/valuation axiom and ultrametric law on K."""
    rng = random.Random(SEED + 1)
    failures = []
    pairs = 0
    while pairs < 10_000:
        x, y = random_kelem(rng, True), random_kelem(rng, True)
        if x.sign() < 0:
            x = -x
        if y.sign() < 0:
            y = -y
        if x == y:
            continue
        if y < x:
            x, y = y, x
        pairs += 1
        if not x.valuation() >= y.valuation():
            failures.append(f"0<{x}<{y}")
    ultra = 0
    for _ in range(10_000):
        a, b = random_kelem(rng), random_kelem(rng)
        va, vb, vs = a.valuation(), b.valuation(), (a + b).valuation()
        lo = min(va, vb)
        ok = vs >= lo
        if va != vb:
            ok = ok and vs == lo
        ultra += 1
        if not ok:
            failures.append(f"ultrametric {a}, {b}")
    return not failures, f"{pairs} order pairs, {ultra} ultrametric pairs, {len(failures)} failures {_fail_list(failures)}"


def _random_direction(rng, n):
    while True:
        d = tuple(KElem.coerce(rng.randint(-3, 3)) for _ in range(n))
        if any(d):
            return d


def criterion_2():
    """Near-point conformance and agreement with pointwise valuation."""
    rng = random.Random(SEED + 2)
    n = 2
    failures = []
    vanish = nonvanish = 0
    while vanish < 500:
        b = random_point(rng, n)
        d = _random_direction(rng, n)
        num = MPoly.zero(n)
        for i in range(n):
            lin = MPoly.var(i, n) - MPoly.const(b[i], n)
            num = num + lin * random_mpoly(rng, n, 1, 2)
        den = random_mpoly(rng, n, 1, 2)
        if not den or not den.eval(b) or not num:
            continue
        f = RatFunc(num, den)
        try:
            val = NearPoint(b, d).value(f)
        except DegenerateDirection:
            continue
        vanish += 1
        if val is not INF and val[0] < 1:
            failures.append(f"vanishing {f} at {b}: {val}")
    while nonvanish < 500:
        b = random_point(rng, n)
        d = _random_direction(rng, n)
        f = random_ratfunc(rng, n)
        try:
            fb = f.eval(b)
        except NotDefinedAt:
            continue
        if not fb:
            continue
        nonvanish += 1
        val = NearPoint(b, d).value(f)
        if val != ValGroupElem((0, fb.valuation())):
            failures.append(f"{f} at {b}: {val} vs {fb.valuation()}")
    return not failures, f"{vanish} vanishing, {nonvanish} non-vanishing, {len(failures)} failures {_fail_list(failures)}"


def criterion_3():
    """Positivity at b forces positivity in the line order."""
    rng = random.Random(SEED + 3)
    n = 2
    failures = []
    done = 0
    while done < 500:
        p = RatFunc(random_mpoly(rng, n, 3, rng.randint(1, 4)))
        b = random_point(rng, n)
        d = _random_direction(rng, n)
        pb = p.eval(b)
        if not pb:
            continue
        if pb.sign() < 0:
            p = -p
        done += 1
        if substitution_order_sign(b, d, p) != 1:
            failures.append(f"{p} at {b} along {d}")
    return not failures, f"{done} triples, {len(failures)} failures {_fail_list(failures)}"


def criterion_4():
    """Generators 1/(1+f) take integral values on S."""
    rng = random.Random(SEED + 4)
    sets = [sd(["x1", "1-x1"]), sd(["x1", "x2", "1-x1-x2"], nvars=2)]
    failures = []
    certs = evaluated = skipped = 0
    for k, s in enumerate(sets):
        pts = sample_set(s, SampleStrategy(Pseudorandom(SEED + 40 + k, 100), EPS_ORDERS)).points
        if len(pts) < 100:
            return False, f"only {len(pts)} sample points for set {k}"
        for _ in range(50):
            cert = random_cone_cert(rng, s)
            g = generator_value(cert, s)
            certs += 1
            for b in pts:
                try:
                    v = g.eval(b).valuation()
                except NotDefinedAt:
                    skipped += 1
                    continue
                evaluated += 1
                if v is not INF and v < 0:
                    failures.append(f"{g} at {b}")
    return not failures, f"{certs} certificates, {evaluated} evaluations ({skipped} undefined), {len(failures)} failures {_fail_list(failures)}"


def perturbations(cert: RadicalCert, count: int, seed: int):
    """Single-coefficient perturbations by a positive power of eps."""
    from ganz.certificates import AlgebraElem, LocalizedElem

    rng = random.Random(seed)
    nsym = len(cert.generators)
    out = []
    for _ in range(count):
        i = rng.randrange(len(cert.coeffs))
        e = tuple(rng.randint(0, 2) for _ in range(nsym))
        delta = KElem.eps(rng.randint(1, 3)) * rng.choice((1, -1, 2))
        c = cert.coeffs[i]
        poly = dict(c.a.poly)
        poly[e] = poly.get(e, KElem.coerce(0)) + delta
        coeffs = list(cert.coeffs)
        coeffs[i] = LocalizedElem(AlgebraElem.from_mapping(poly), c.t_m, c.t_a)
        out.append(RadicalCert(cert.h, cert.generators, tuple(coeffs)))
    return out


def criterion_5():
    """The shipped certificate verifies; its perturbations do not."""
    name, s, cert = shipped_radical_certs()[0]
    if not verify_radical_cert(cert, s).valid:
        return False, f"shipped certificate {name} is not Valid"
    bad = []
    for k, pert in enumerate(perturbations(cert, 20, SEED + 5)):
        v = verify_radical_cert(pert, s)
        if v.valid or v.residual.is_zero():
            bad.append(str(k))
    return not bad, f"{name} Valid; 20 perturbations, {20 - len(bad)} Invalid with nonzero residual"


def criterion_6():
    """Semi-section laws with explicit square witnesses."""
    rng = random.Random(SEED + 6)
    failures = []
    checks = 0
    for name, ss in semisection_instances():
        v = ss.valuation
        r = v.rank
        for i, (gamma, p) in enumerate(ss.forced):
            w = ss.forcing_witness(i)
            if ss(gamma) / p != w * w:
                failures.append(f"{name}: forcing {i}")
        for _ in range(200):
            g1 = ValGroupElem(rng.randint(-5, 5) for _ in range(r))
            g2 = ValGroupElem(rng.randint(-5, 5) for _ in range(r))
            for g in (g1, g2, g1 + g2):
                if v.value(ss(g)) != g:
                    failures.append(f"{name}: value of s{g}")
            w = ss.law_witness(g1, g2)
            if ss(g1 + g2) / (ss(g1) * ss(g2)) != w * w or w.is_zero():
                failures.append(f"{name}: law at {g1}, {g2}")
            checks += 1
    return not failures, f"{checks} gamma pairs, {len(failures)} failures {_fail_list(failures)}"


def order_handles():
    out = [(name, sufficiency_pipeline(v, s).order) for name, v, s in pipeline_instances()]
    out.append(("K with s(n)=(-eps)^n", k_sign_flip_order()))
    return out


def check_order(order, nvars: int, rng: random.Random, samples: int):
    """Field-order, inducing and convexity laws on sampled pairs."""
    v = order.valuation
    zero = ValGroupElem.zero(v.rank)
    failures = []
    for _ in range(samples):
        f = random_ratfunc(rng, nvars) if nvars else RatFunc.const(random_kelem(rng, True), 0)
        g = random_ratfunc(rng, nvars) if nvars else RatFunc.const(random_kelem(rng, True), 0)
        sf, sg = order.sign(f), order.sign(g)
        if sf not in (1, -1) or order.sign(-f) != -sf:
            failures.append(f"trichotomy {f}")
        if order.sign(f * g) != sf * sg:
            failures.append(f"product {f}, {g}")
        pf, pg = (f if sf > 0 else -f), (g if sg > 0 else -g)
        if order.sign(pf + pg) != 1:
            failures.append(f"sum {pf}, {pg}")
        if v.value(f) == zero and sf != order.residue_order.sign(v.residue(f)):
            failures.append(f"inducing {f}")
        diff = order.sign(pg - pf)
        if diff:
            lo, hi = (pf, pg) if diff > 0 else (pg, pf)
            if not v.value(lo) >= v.value(hi):
                failures.append(f"convexity {lo} < {hi}")
    return failures


def criterion_7(samples: int = 1000):
    """Orders built from a semi-section are field orders compatible with v."""
    rng = random.Random(SEED + 7)
    failures = []
    names = []
    for name, order in order_handles():
        nvars = order.valuation.nvars
        failures += [f"{name}: {x}" for x in check_order(order, nvars, rng, samples)]
        names.append(name.split(" ")[0])
    return not failures, f"{len(names)} orders x {samples} pairs, {len(failures)} failures {_fail_list(failures)}"


def criterion_8():
    """The sufficiency pipeline makes every p_i positive."""
    details = []
    ok = True
    for name, v, s in pipeline_instances():
        result = sufficiency_pipeline(v, s)
        signs = [result.order.sign(RatFunc(p)) for p in s.p]
        ok = ok and all(x == 1 for x in signs)
        details.append(f"{name.split(' ')[0]} signs={signs}")
    return ok, "; ".join(details)


def criterion_9():
    """Valid certificates never meet a probing violation; 1/x1 does."""
    failures = []
    for k, (name, s, cert) in enumerate(shipped_radical_certs()):
        if not verify_radical_cert(cert, s).valid:
            failures.append(f"{name} not Valid")
            continue
        rep = integrality_probe(cert.h, s, SampleStrategy(Pseudorandom(SEED + 90 + k, 500), EPS_ORDERS))
        if rep.violation or rep.tested + rep.skipped_undefined < 500:
            failures.append(f"{name}: {rep.verdict}, {rep.tested} tested")
    s = sd(["x1"])
    h = parse("1/x1", 1)
    rep = integrality_probe(h, s, SampleStrategy(Pseudorandom(7, 200), EPS_ORDERS))
    if rep.violation is None:
        failures.append("1/x1 on x1>0: no violation")
    else:
        b = rep.violation.witness
        again = h.eval(b)
        if not (s.contains(b) and again == rep.violation.value and again.valuation() < 0):
            failures.append("witness does not reproduce")
        rep2 = integrality_probe(h, s, SampleStrategy(Pseudorandom(7, 200), EPS_ORDERS))
        if rep2 != rep:
            failures.append("probe not deterministic")
    witness = "" if rep.violation is None else f"; 1/x1 witness b=({rep.violation.witness[0]})"
    return not failures, f"{len(shipped_radical_certs())} certificates clean{witness} {_fail_list(failures)}"


def criterion_10():
    """Handelman search round trip and a refusal."""
    s = sd(["x1", "1-x1"])
    target = parse("x1 - x1^2", 1)
    cert = handelman_search(s, target, 2)
    ok1 = cert is not None and cone_value(cert, s) == target
    none = handelman_search(sd(["x1"]), parse("-x1", 1), 3)
    return ok1 and none is None, f"found={cert is not None}, value matches={ok1}, -x1 Unknown={none is None}"


def _same_set(a, b):
    return a.nvars == b.nvars and len(a.p) == len(b.p) and len(a.g) == len(b.g) and all(
        x == y for x, y in zip(a.p, b.p)
    ) and all(RatFunc(x) == RatFunc(y) if isinstance(x, MPoly) else x == y for x, y in zip(a.g, b.g))


def same_cone(a: ConeCert, b: ConeCert) -> bool:
    if [J for J, _ in a.terms] != [J for J, _ in b.terms]:
        return False
    return all(
        len(x.parts) == len(y.parts) and all(p == q for p, q in zip(x.parts, y.parts))
        for (_, x), (_, y) in zip(a.terms, b.terms)
    )


def same_radical(a: RadicalCert, b: RadicalCert) -> bool:
    return (
        a.h == b.h
        and len(a.generators) == len(b.generators)
        and all(same_cone(x, y) for x, y in zip(a.generators, b.generators))
        and len(a.coeffs) == len(b.coeffs)
        and all(
            dict(x.a.poly) == dict(y.a.poly) and x.t_m == y.t_m and dict(x.t_a.poly) == dict(y.t_a.poly)
            for x, y in zip(a.coeffs, b.coeffs)
        )
    )


def criterion_11():
    """Certificate files round-trip; CLI output is reproducible."""
    from ganz.cli import run

    rng = random.Random(SEED + 11)
    sets = [sd(["x1", "1-x1"]), sd(["x1", "x2", "1-x1-x2"], ["x1/(1+eps)"], nvars=2), sd([], ["x1^2"])]
    failures = []
    for k in range(100):
        s = sets[k % len(sets)]
        cone = random_cone_cert(rng, s)
        s2, back = loads(dumps(s, cone))
        if not (_same_set(s, s2) and same_cone(cone, back) and cone_value(cone, s) == cone_value(back, s2)):
            failures.append(f"cone {k}")
        rad = random_radical_cert(rng, s)
        s3, back = loads(dumps(s, rad))
        if not (_same_set(s, s3) and same_radical(rad, back)):
            failures.append(f"radical {k}")
    argv = ["probe-integrality", "--h", "1/x1", "--set", "p: x1", "--seed", "7", "--count", "200"]
    r1, r2 = run(argv), run(argv)
    if r1 != r2:
        failures.append("CLI output differs between runs")
    return not failures, f"200 certificates round-tripped, CLI exit {r1[0]} identical={r1 == r2} {_fail_list(failures)}"


CRITERIA = [
    (1, "OVF axioms on K", criterion_1),
    (2, "near-point conformance", criterion_2),
    (3, "positivity at b forces the line order", criterion_3),
    (4, "generators 1/(1+f) integral on S", criterion_4),
    (5, "radical verifier and perturbations", criterion_5),
    (6, "semi-section laws", criterion_6),
    (7, "Baer-Krull order laws", criterion_7),
    (8, "sufficiency pipeline", criterion_8),
    (9, "necessity vs probing", criterion_9),
    (10, "Handelman search", criterion_10),
    (11, "serialization and CLI determinism", criterion_11),
]


def run_criterion(number: int) -> Outcome:
    for num, name, fn in CRITERIA:
        if num == number:
            t0 = time.perf_counter()
            passed, detail = fn()
            return Outcome(num, name, bool(passed), detail, time.perf_counter() - t0)
    raise KeyError(number)


def run_all():
    return [run_criterion(num) for num, _, _ in CRITERIA]


__all__ = ["CRITERIA", "Outcome", "run_all", "run_criterion", "check_order", "perturbations", "EPS"]
