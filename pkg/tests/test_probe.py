from fractions import Fraction

from ganz.instances import sd
from ganz.ovf_core import EPS, KElem
from ganz.parser import parse
from ganz.probe import (
    Grid,
    Pseudorandom,
    SampleStrategy,
    boundedness_probe,
    convex_hull_Z_check,
    integrality_probe,
    sample_set,
)


def P(text, n=1):
    return parse(text, n)


def test_grid_sampling():
    got = sample_set(sd(["x1", "1-x1"]), SampleStrategy(Grid(Fraction(1, 4), 2)))
    assert [b[0] for b in got.points] == [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)]
    assert not got.nonemptiness_unknown


def test_empty_set():
    for strat in (SampleStrategy(Grid(Fraction(1, 2), 3), (1,)), SampleStrategy(Pseudorandom(1, 20), (1, -1))):
        got = sample_set(sd(["-1-x1^2"]), strat)
        assert got.points == [] and got.nonemptiness_unknown


def test_eps_point_qualifies():
    got = sample_set(sd(["x1"]), SampleStrategy(Grid(1, 0), (1,)))
    assert got.points == [(EPS,)]


def test_integrality_examples():
    rep = integrality_probe(P("1/x1"), sd(["x1"]), SampleStrategy(Grid(1, 0), (1,)))
    assert rep.violation.witness == (EPS,) and rep.violation.val[0] == -1
    assert rep.verdict == "Violation"
    strat = SampleStrategy(Pseudorandom(5, 300), (1, 2, -1))
    assert integrality_probe(P("1/(1+x1)"), sd(["x1"]), strat).violation is None
    rep = integrality_probe(P("1/(1+x1*(1-x1))"), sd(["x1", "1-x1"]), strat)
    assert rep.violation is None and rep.verdict == "NoViolationFound" and rep.tested > 0


def test_boundedness_examples():
    strat = SampleStrategy(Grid(1, 0), (1,))
    assert boundedness_probe(P("1/x1"), 1 / EPS, sd(["x1"]), strat).violation is None
    rep = boundedness_probe(P("x1"), 1, sd(["x1"]), SampleStrategy(Grid(1, 0), (-1,)))
    assert rep.violation.witness == (1 / EPS,)
    rnd = SampleStrategy(Pseudorandom(2, 100), (1, -1))
    assert boundedness_probe(P("5"), 1, sd(["x1"]), rnd).violation is None


def test_seed_7_finds_witness_reproducibly():
    strat = SampleStrategy(Pseudorandom(7, 200), (1, 2, -1))
    a = integrality_probe(P("1/x1"), sd(["x1"]), strat)
    b = integrality_probe(P("1/x1"), sd(["x1"]), strat)
    assert a == b and a.violation is not None
    w = a.violation.witness
    assert P("1/x1").eval(w).valuation() < 0 and w[0].sign() > 0


def test_undefined_points_are_skipped():
    rep = integrality_probe(P("1/(x1-1)"), sd(["x1"]), SampleStrategy(Grid(1, 2)))
    assert rep.skipped_undefined == 1


def test_convex_hull_z():
    assert not convex_hull_Z_check(1 / EPS)
    assert convex_hull_Z_check(KElem.coerce(1000000))
    assert not convex_hull_Z_check((1 + EPS) / EPS**2)
