import random

import pytest

from ganz.baer_krull import (
    STANDARD_Q,
    ResidueOrder,
    baer_krull_order,
    build_semisection,
    even_case_order_search,
    f2_max_independent,
    residue_order_catalog,
    sufficiency_pipeline,
)
from ganz.errors import DependentParities, OrderNotFound
from ganz.instances import k_sign_flip_order, pipeline_instances, random_ratfunc, sd, semisection_instances
from ganz.ovf_core import EPS, ValGroupElem
from ganz.parser import parse
from ganz.ratfunc import RatFunc
from ganz.valuations import NearPoint, WeightedGauss, residue, val_of


def P(text, n=1):
    return parse(text, n)


class TestParityBasis:
    def test_worked_examples(self):
        b = f2_max_independent([(1, 0), (1, 0), (0, 1)])
        assert b.chosen == (0, 2) and b.combination[1] == (0,)
        assert f2_max_independent([]).chosen == ()
        b = f2_max_independent([(1, 1), (1, 0), (0, 1)])
        assert b.chosen == (0, 1) and set(b.combination[2]) == {0, 1}

    def test_random_against_brute_force(self):
        rng = random.Random(1)
        for _ in range(500):
            r = rng.randint(1, 3)
            vecs = [tuple(rng.randint(0, 1) for _ in range(r)) for _ in range(rng.randint(0, 5))]
            b = f2_max_independent(vecs)
            for i, combo in enumerate(b.combination):
                acc = [0] * r
                for j in combo:
                    assert j in b.chosen
                    acc = [x ^ y for x, y in zip(acc, vecs[j])]
                assert tuple(acc) == tuple(vecs[i])
            # chosen rows are independent: no nonempty subset XORs to zero
            for mask in range(1, 1 << len(b.chosen)):
                acc = [0] * r
                for k, j in enumerate(b.chosen):
                    if mask >> k & 1:
                        acc = [x ^ y for x, y in zip(acc, vecs[j])]
                assert any(acc)


class TestSemiSection:
    def test_worked_example(self):
        v = NearPoint((0,), (1,))
        s = build_semisection(v, [((1, 0), P("x1"))])
        assert s(ValGroupElem((3, 2))) == P("x1^3*eps^2")
        assert val_of(v, s(ValGroupElem((3, 2)))) == ValGroupElem((3, 2))
        assert s(ValGroupElem((1, 0))) / P("x1") == 1
        assert s.forcing_witness(0) == 1

    def test_dependent_parities(self):
        v = NearPoint((0,), (1,))
        with pytest.raises(DependentParities):
            build_semisection(v, [((1, 0), P("x1")), ((1, 0), P("eps*x1"))])

    def test_forced_value_must_match(self):
        with pytest.raises(ValueError):
            build_semisection(NearPoint((0,), (1,)), [((0, 1), P("x1"))])

    @pytest.mark.parametrize("name, s", semisection_instances(), ids=lambda x: x if isinstance(x, str) else "")
    def test_laws(self, name, s):
        rng = random.Random(3)
        r = s.valuation.rank
        for _ in range(100):
            g1 = ValGroupElem(tuple(rng.randint(-4, 4) for _ in range(r)))
            g2 = ValGroupElem(tuple(rng.randint(-4, 4) for _ in range(r)))
            assert val_of(s.valuation, s(g1)) == g1
            w = s.law_witness(g1, g2)
            assert w * w == s(g1 + g2) / (s(g1) * s(g2))


class TestOrders:
    def test_worked_examples(self):
        std = baer_krull_order(WeightedGauss(()), build_semisection(WeightedGauss(()), []), STANDARD_Q)
        assert std.sign(RatFunc.const(-3 * EPS + EPS**2, 0)) == -1
        assert k_sign_flip_order().sign(RatFunc.const(EPS, 0)) == -1
        v = NearPoint((0,), (1,))
        o = baer_krull_order(v, build_semisection(v, [((1, 0), P("x1"))]), STANDARD_Q)
        assert o.sign(P("x1")) == 1

    def test_leading_sign_order(self):
        ro = ResidueOrder((1, 0), (1, -1))  # y2 dominates, y2 negative
        assert ro.sign(P("x2", 2)) == -1
        assert ro.sign(P("x2^2 - x1^5", 2)) == 1
        assert ro.sign(P("x1 + 7", 2)) == 1
        assert ro.sign(P("-1", 2)) == -1

    def test_catalog(self):
        cat = residue_order_catalog(WeightedGauss((1, 0)))
        assert len(cat) == 8 and len(set(cat)) == 8
        assert residue_order_catalog(NearPoint((0,), (1,))) == [STANDARD_Q]

    def test_order_axioms_on_random_elements(self):
        rng = random.Random(10)
        v = WeightedGauss((1, 0))
        s = build_semisection(v, [((1,), P("x1", 2))])
        for ro in residue_order_catalog(v)[:3]:
            o = baer_krull_order(v, s, ro)
            for _ in range(60):
                f, g = random_ratfunc(rng, 2), random_ratfunc(rng, 2)
                assert o.sign(f * g) == o.sign(f) * o.sign(g)
                assert o.sign(-f) == -o.sign(f)
                if o.sign(f) > 0 and o.sign(g) > 0:
                    assert o.sign(f + g) == 1
                if val_of(v, f) == ValGroupElem((0,)):
                    assert o.sign(f) == ro.sign(residue(v, f))


class TestPipeline:
    @pytest.mark.parametrize("name, v, s", pipeline_instances(), ids=lambda x: x if isinstance(x, str) else "")
    def test_shipped(self, name, v, s):
        result = sufficiency_pipeline(v, s)
        assert result.signs == (1,) * len(s.p)
        for p in s.p:
            assert result.order.sign(RatFunc(p)) == 1

    def test_empty(self):
        assert sufficiency_pipeline(WeightedGauss((1,)), sd()).signs == ()

    def test_even_case_square_residue(self):
        v = WeightedGauss((1,))
        s = sd(["x1", "x1^2+eps^3"])
        basis = f2_max_independent([(1,), (0,)])
        found = even_case_order_search(v, s, basis)
        assert found.order is not None
        assert found.residues[0][2] == P("x1^2")

    def test_not_found(self):
        with pytest.raises(OrderNotFound):
            sufficiency_pipeline(WeightedGauss((1,)), sd(["-x1^2"]))
