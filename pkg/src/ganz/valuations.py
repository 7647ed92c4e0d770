"""Computable valuations on L = K(x1..xn) that extend the eps-adic valuation.

Two families are provided:

``NearPoint(b, d)``
    Restrict along the line ``b + t*d`` with ``t`` a positive infinitesimal
    below every element of K.  The value of ``f`` is
    ``(ord_t f(b+td), v_K(leading t-coefficient))`` in Z^2 ordered
    lexicographically; functions vanishing at ``b`` get a first coordinate
    of at least 1 and so exceed every value coming from K.  The residue
    field is Q.

``WeightedGauss(w)``
    The Gauss valuation with weight ``w_i`` on ``x_i``:
    ``min(v_K(c) + <w, e>)`` over the support.  The residue field is
    ``Q(y1..yn)``, reached by substituting ``x_i = eps^w_i * y_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ganz.errors import DegenerateDirection, NonzeroValuation, NotDefinedAt
from ganz.ovf_core import EPS, INF, ONE, KElem, ValGroupElem
from ganz.ratfunc import MPoly, RatFunc, as_point


def _leading_line_coeff(poly: MPoly, b, d):
    """``(ord_t, coefficient)`` of the lowest t-power of ``poly(b + t*d)``."""
    coeffs = poly.line_coeffs(b, d)
    for k, c in enumerate(coeffs):
        if c:
            return k, c
    return None


@dataclass(frozen=True)
class NearPoint:
    b: tuple
    d: tuple

    def __post_init__(self):
        object.__setattr__(self, "b", as_point(self.b))
        object.__setattr__(self, "d", as_point(self.d))
        if len(self.b) != len(self.d):
            raise ValueError("point and direction differ in length")
        if all(not c for c in self.d):
            raise ValueError("direction must be nonzero")

    rank = 2

    @property
    def nvars(self) -> int:
        return len(self.b)

    def embed(self, gamma: int) -> ValGroupElem:
        return ValGroupElem((0, gamma))

    def leading(self, f: RatFunc):
        """Split ``f(b + t*d) = a * t^k + higher terms``; returns ``(k, a)``.

        Returns None for the zero function.
        """
        if f.is_zero():
            return None
        num = _leading_line_coeff(f.num, self.b, self.d)
        den = _leading_line_coeff(f.den, self.b, self.d)
        if den is None:
            raise DegenerateDirection(f"denominator of {f} vanishes on the line")
        if num is None:
            raise DegenerateDirection(f"numerator of {f} vanishes on the line")
        return num[0] - den[0], num[1] / den[1]

    def value(self, f: RatFunc):
        lead = self.leading(f)
        if lead is None:
            return INF
        k, a = lead
        return ValGroupElem((k, a.valuation()))

    def residue(self, f: RatFunc) -> Fraction:
        lead = self.leading(f)
        if lead is None:
            return Fraction(0)
        k, a = lead
        if k != 0 or a.valuation() != 0:
            raise NonzeroValuation(f"{f} has value {(k, a.valuation())}")
        return a.residue()

    def sign(self, f: RatFunc) -> int:
        """Sign in the order with t positive and infinitesimal over K."""
        lead = self.leading(f)
        return 0 if lead is None else lead[1].sign()

    def uniformizer(self) -> RatFunc:
        """An element whose restriction to the line is exactly ``t``."""
        n = self.nvars
        k = next(i for i, c in enumerate(self.d) if c)
        return (RatFunc.var(k, n) - RatFunc.const(self.b[k], n)) * RatFunc.const(
            self.d[k].inverse(), n
        )

    def base_section(self, gamma) -> RatFunc:
        """Homomorphic section ``(a, c) -> T^a * eps^c``."""
        a, c = gamma
        n = self.nvars
        return self.uniformizer() ** a * RatFunc.const(KElem.eps(c), n)

    def unit_generators(self):
        """Elements of value ``e_1 = (1, 0)`` and ``e_2 = (0, 1)``."""
        return [self.uniformizer(), RatFunc.const(EPS, self.nvars)]


@dataclass(frozen=True)
class WeightedGauss:
    w: tuple

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(int(a) for a in self.w))

    rank = 1

    @property
    def nvars(self) -> int:
        return len(self.w)

    def embed(self, gamma: int) -> ValGroupElem:
        return ValGroupElem((gamma,))

    def poly_value(self, p: MPoly):
        if not p.terms:
            return INF
        return min(c.valuation() + sum(a * b for a, b in zip(self.w, e)) for e, c in p.terms.items())

    def value(self, f: RatFunc):
        if f.is_zero():
            return INF
        return ValGroupElem((self.poly_value(f.num) - self.poly_value(f.den),))

    def initial_form(self, p: MPoly) -> MPoly:
        """Rational polynomial in y collecting the terms of minimal weight."""
        v = self.poly_value(p)
        out = {}
        for e, c in p.terms.items():
            cv = c.valuation()
            if cv + sum(a * b for a, b in zip(self.w, e)) == v:
                out[e] = KElem.coerce((c * KElem.eps(-cv)).residue())
        return MPoly(p.nvars, out)

    def residue(self, f: RatFunc) -> RatFunc:
        if f.is_zero():
            return RatFunc.const(0, self.nvars)
        v = self.value(f)
        if v != ValGroupElem((0,)):
            raise NonzeroValuation(f"{f} has value {v}")
        return RatFunc(self.initial_form(f.num), self.initial_form(f.den))

    def base_section(self, gamma) -> RatFunc:
        (c,) = gamma
        return RatFunc.const(KElem.eps(c), self.nvars)

    def unit_generators(self):
        return [RatFunc.const(EPS, self.nvars)]


ValuationHandle = NearPoint | WeightedGauss


def val_of(v, f: RatFunc):
    return v.value(f)


def residue(v, f: RatFunc):
    return v.residue(f)


def substitution_order_sign(b, d, f: RatFunc) -> int:
    return NearPoint(b, d).sign(f)


def check_near_property(v: NearPoint, f: RatFunc) -> bool:
    """Functions vanishing at ``b`` must have first value coordinate >= 1."""
    try:
        at_b = f.eval(v.b)
    except NotDefinedAt:
        return True
    if at_b:
        return True
    value = v.value(f)
    return value is INF or value[0] >= 1


__all__ = [
    "NearPoint", "WeightedGauss", "ValuationHandle", "val_of", "residue",
    "substitution_order_sign", "check_near_property", "ONE",
]
