import importlib

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ganz import _pykernels as py

try:
    cy = importlib.import_module("ganz._kernels")
except ImportError:  # extension not built
    cy = None

small = st.lists(st.integers(-50, 50), max_size=7).map(lambda xs: py.trim(xs))
big = st.lists(st.integers(-(2**80), 2**80), max_size=5).map(lambda xs: py.trim(xs))
polys = st.one_of(small, big)


def naive_mul(a, b):
    out = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return py.trim(out)


def test_backend_selection_env(monkeypatch):
    import ganz.kernels as k

    monkeypatch.setenv("GANZ_PURE_PYTHON", "1")
    reloaded = importlib.reload(k)
    try:
        assert reloaded.BACKEND == "python"
    finally:
        monkeypatch.delenv("GANZ_PURE_PYTHON")
        importlib.reload(k)


@given(polys, polys)
def test_pmul_matches_naive(a, b):
    assert py.pmul(a, b) == naive_mul(a, b)


@given(polys, polys)
def test_gcd_divides_both(a, b):
    g = py.pgcd(a, b)
    if not a and not b:
        assert g == ()
        return
    assert g and g[-1] > 0
    for p in (a, b):
        if p:
            q = py.pdivexact(py.pprimitive(p), g)
            assert naive_mul(q, g) == py.pprimitive(p)


def test_gcd_examples():
    # (1+e)(2+e) and (1+e)(3-e) share 1+e
    a = naive_mul((1, 1), (2, 1))
    b = naive_mul((1, 1), (3, -1))
    assert py.pgcd(a, b) == (1, 1)
    assert py.pgcd((0, 0, 4), (0, 6)) == (0, 1)
    assert py.pgcd((2, 4), ()) == (1, 2)


def test_eval_terms_homogenized():
    # x^2 + 3 at x = 1/2 with degree 2:  (1*1 + 3*4) / 4
    total = py.eval_terms([((2,), (1,)), ((0,), (3,))], [(1,)], [(2,)], [2])
    assert total == (13,)


@pytest.mark.skipif(cy is None, reason="compiled kernels not built")
class TestCompiledTwin:
    @settings(max_examples=300)
    @given(polys, polys)
    def test_binary_ops(self, a, b):
        for name in ("padd", "psub", "pmul", "pgcd"):
            assert getattr(cy, name)(a, b) == getattr(py, name)(a, b), name
        if b:
            assert cy.pprem(a, b) == py.pprem(a, b)

    @given(polys, st.integers(0, 5))
    def test_unary_ops(self, a, k):
        assert cy.ppow(a, k) == py.ppow(a, k)
        assert cy.pprimitive(a) == py.pprimitive(a)
        assert cy.pcontent(a) == py.pcontent(a)
        assert cy.pord(a) == py.pord(a)
        assert cy.pneg(a) == py.pneg(a)

    @given(polys, polys)
    def test_exact_division(self, a, b):
        if b:
            assert cy.pdivexact(py.pmul(a, b), b) == a

    def test_overflow_boundary(self):
        a = (2**30, 2**30 - 1, -(2**30))
        assert cy.pmul(a, a) == naive_mul(a, a)
        a = (2**31, 3)
        assert cy.pmul(a, a) == naive_mul(a, a)

    def test_eval_terms(self):
        terms = [((2, 1), (1, 1)), ((0, 0), (-3,)), ((1, 0), (0, 2))]
        args = (terms, [(1, 1), (2,)], [(3,), (1, 0, 1)], [2, 1])
        assert cy.eval_terms(*args) == py.eval_terms(*args)


def test_pure_fallback_end_to_end():
    """The package runs unchanged with the compiled kernels switched off."""
    import os
    import subprocess
    import sys

    code = (
        "import ganz; from ganz.acceptance import run_criterion\n"
        "assert ganz.BACKEND == 'python'\n"
        "for n in (5, 8, 10):\n"
        "    assert run_criterion(n).passed, n\n"
    )
    env = dict(os.environ, GANZ_PURE_PYTHON="1")
    proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
