"""Sparse multivariate polynomials and rational functions over K = Q(eps).

Variables are ``x1 .. xn`` (index 0 .. n-1 internally).  Rational functions
are kept as a numerator/denominator pair without multivariate gcd; equality
is decided by cross-multiplication.  Normalization only clears eps
denominators, removes the common eps-polynomial content and the common
monomial factor, and fixes the sign of the denominator.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping, Sequence

from ganz import kernels as kn
from ganz.errors import (
    DivisionByZero,
    Indeterminate,
    LineInDenominatorLocus,
    NotDefinedAt,
)
from ganz.ovf_core import ONE, ZERO, KElem

Point = tuple  # tuple of KElem, one per variable


def as_point(coords: Iterable) -> Point:
    return tuple(KElem.coerce(c) for c in coords)


def _grlex_key(exps):
    return (sum(exps), exps)


def _common_denominator(dens) -> tuple:
    """A common multiple in Z[eps] of the given eps-polynomials."""
    acc = (1,)
    ints = 1
    seen = set()
    for d in dens:
        if d in seen or d == (1,):
            continue
        seen.add(d)
        if len(d) == 1:
            c = abs(d[0])
            ints = ints * c // gcd(ints, c)
            continue
        cont = kn.pcontent(d)
        ints = ints * cont // gcd(ints, cont)
        prim = kn.pprimitive(d)
        g = kn.pgcd(acc, prim)
        acc = kn.pmul(acc, kn.pdivexact(prim, g))
    return kn.pscale(acc, ints)


class MPoly:
    """Polynomial in ``nvars`` variables with KElem coefficients."""

    __slots__ = ("nvars", "terms", "_int_form")

    def __init__(self, nvars: int, terms: Mapping[tuple, KElem] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                c = KElem.coerce(c)
                if c:
                    if len(e) != nvars:
                        raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                    clean[tuple(e)] = c
        self.terms = clean
        self._int_form = None

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._int_form = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> MPoly:
        return cls._raw(nvars, {})

    @classmethod
    def const(cls, c, nvars: int) -> MPoly:
        c = KElem.coerce(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, i: int, nvars: int) -> MPoly:
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): ONE})

    # predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_value(self) -> KElem:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms.get((0,) * self.nvars, ZERO)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=0)

    def leading_term(self):
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    # arithmetic ------------------------------------------------------------

    def _coerce(self, other) -> MPoly:
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return MPoly.const(KElem.coerce(other), self.nvars)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(self.terms) < len(other.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for e, c in small.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> MPoly:
        c = KElem.coerce(c)
        if not c:
            return MPoly.zero(self.nvars)
        if c == ONE:
            return self
        return MPoly._raw(self.nvars, {e: a * c for e, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, KElem)) or not isinstance(other, MPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._coerce(other)
        if not self.terms or not other.terms:
            return MPoly.zero(self.nvars)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prev = out.get(e)
                out[e] = c1 * c2 if prev is None else prev + c1 * c2
        return MPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.const(ONE, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, KElem)):
            other = MPoly.const(other, self.nvars)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def embed(self, nvars: int) -> MPoly:
        if nvars < self.nvars:
            raise ValueError("cannot embed into fewer variables")
        pad = (0,) * (nvars - self.nvars)
        return MPoly._raw(nvars, {e + pad: c for e, c in self.terms.items()})

    # evaluation ------------------------------------------------------------

    def _integer_form(self):
        if self._int_form is None:
            dens = [c.den for c in self.terms.values()]
            D = _common_denominator(dens)
            terms = []
            for e, c in self.terms.items():
                terms.append((e, kn.pmul(c.num, kn.pdivexact(D, c.den))))
            degs = tuple(self.degree_in(i) for i in range(self.nvars))
            self._int_form = (tuple(terms), D, degs)
        return self._int_form

    def eval(self, point: Sequence) -> KElem:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        if not self.terms:
            return ZERO
        terms, D, degs = self._integer_form()
        pt = [KElem.coerce(c) for c in point]
        nums = tuple(c.num for c in pt)
        dens = tuple(c.den for c in pt)
        N = kn.eval_terms(terms, nums, dens, degs)
        denom = D
        for i in range(self.nvars):
            if degs[i]:
                denom = kn.pmul(denom, kn.ppow(dens[i], degs[i]))
        return KElem(N, denom)

    def line_coeffs(self, b: Sequence, d: Sequence) -> list:
        """Dense coefficients (ascending in t) of ``self(b + t*d)``."""
        n = self.nvars
        pows = []
        for i in range(n):
            lin = [KElem.coerce(b[i]), KElem.coerce(d[i])]
            row = [[ONE]]
            for _ in range(self.degree_in(i)):
                row.append(_dense_mul(row[-1], lin))
            pows.append(row)
        out: list = []
        for e, c in self.terms.items():
            acc = [c]
            for i in range(n):
                if e[i]:
                    acc = _dense_mul(acc, pows[i][e[i]])
            out = _dense_add(out, acc)
        while out and not out[-1]:
            out.pop()
        return out

    def __repr__(self):
        from ganz.parser import format_mpoly

        return f"MPoly({format_mpoly(self)!r})"

    def __str__(self):
        from ganz.parser import format_mpoly

        return format_mpoly(self)


def _dense_mul(a, b):
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return out


def _dense_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = out[i] + y
    return out


def _coefficient_gcd(polys: Iterable[MPoly]) -> tuple:
    """gcd in Z[eps] of every coefficient numerator (all dens must be 1)."""
    g = ()
    icont = 0
    for p in polys:
        for c in p.terms.values():
            icont = gcd(icont, kn.pcontent(c.num))
            g = c.num if not g else kn.pgcd(g, c.num)
            if g == (1,) and icont == 1:
                return (1,)
    return kn.pscale(kn.pprimitive(g), icont) if g else (1,)


class RatFunc:
    """An element of L = K(x1, ..., xn) as ``num/den``."""

    __slots__ = ("num", "den", "nvars")

    def __init__(self, num: MPoly, den: MPoly | None = None, *, normalize: bool = True):
        if den is None:
            den = MPoly.const(ONE, num.nvars)
        if num.nvars != den.nvars:
            raise ValueError("numerator and denominator live in different rings")
        if not den.terms:
            raise DivisionByZero("rational function with zero denominator")
        self.nvars = num.nvars
        if normalize:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    # constructors ----------------------------------------------------------

    @classmethod
    def const(cls, c, nvars: int) -> RatFunc:
        return cls(MPoly.const(c, nvars), normalize=False)

    @classmethod
    def var(cls, i: int, nvars: int) -> RatFunc:
        return cls(MPoly.var(i, nvars), normalize=False)

    @classmethod
    def raw(cls, num: MPoly, den: MPoly) -> RatFunc:
        """Keep ``num/den`` exactly as given (no cancellation)."""
        return cls(num, den, normalize=False)

    def coerce(self, other) -> RatFunc:
        if isinstance(other, RatFunc):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, MPoly):
            return RatFunc(other)
        return RatFunc.const(KElem.coerce(other), self.nvars)

    # predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num.terms

    def __bool__(self):
        return bool(self.num.terms)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> KElem:
        return self.num.constant_value() / self.den.constant_value()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> MPoly:
        if not self.den.is_constant():
            raise ValueError(f"{self} is not a polynomial")
        return self.num.scale(self.den.constant_value().inverse())

    # arithmetic ------------------------------------------------------------

    def __add__(self, other):
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num.terms:
            return self
        if not self.num.terms:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self.coerce(other) - self

    def __mul__(self, other):
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num.terms or not other.num.terms:
            return RatFunc.const(ZERO, self.nvars)
        if self.num == other.den:
            return RatFunc(other.num, self.den)
        if self.den == other.num:
            return RatFunc(self.num, other.den)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if not self.num.terms:
            raise DivisionByZero("inverse of the zero function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = self.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def __eq__(self, other):
        if isinstance(other, (int, KElem, MPoly)):
            other = self.coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def embed(self, nvars: int) -> RatFunc:
        return RatFunc(self.num.embed(nvars), self.den.embed(nvars), normalize=False)

    # evaluation ------------------------------------------------------------

    def eval(self, point: Sequence) -> KElem:
        point = as_point(point)
        d = self.den.eval(point)
        if not d:
            if not self.num.eval(point):
                raise Indeterminate(point, f"0/0 at {_fmt_point(point)}")
            raise NotDefinedAt(point, f"not defined at {_fmt_point(point)}")
        return self.num.eval(point) / d

    def subst_line(self, b: Sequence, d: Sequence) -> RatFunc:
        """``self(b + t*d)`` as a rational function in the single variable t."""
        b, d = as_point(b), as_point(d)
        if all(not c for c in d):
            raise ValueError("direction must be nonzero")
        den = self.den.line_coeffs(b, d)
        if not den:
            raise LineInDenominatorLocus(
                f"denominator vanishes on the line {_fmt_point(b)} + t*{_fmt_point(d)}"
            )
        num = self.num.line_coeffs(b, d)
        return RatFunc(_dense_to_mpoly(num), _dense_to_mpoly(den))

    def __repr__(self):
        from ganz.parser import format_ratfunc

        return f"RatFunc({format_ratfunc(self)!r})"

    def __str__(self):
        from ganz.parser import format_ratfunc

        return format_ratfunc(self)


def _dense_to_mpoly(coeffs) -> MPoly:
    return MPoly(1, {(k,): c for k, c in enumerate(coeffs) if c})


def _fmt_point(point) -> str:
    return "(" + ", ".join(str(c) for c in point) + ")"


def _normalize(num: MPoly, den: MPoly):
    n = num.nvars
    if not num.terms:
        return MPoly.zero(n), MPoly.const(ONE, n)
    if den.is_constant():
        c = den.constant_value()
        return (num if c == ONE else num.scale(c.inverse())), MPoly.const(ONE, n)
    # clear eps denominators
    dens = [c.den for c in num.terms.values()] + [c.den for c in den.terms.values()]
    if any(d != (1,) for d in dens):
        D = KElem(_common_denominator(dens))
        num, den = num.scale(D), den.scale(D)
    # common content in Z[eps]
    g = _coefficient_gcd((num, den))
    if g != (1,):
        ginv = KElem((1,), g)
        num, den = num.scale(ginv), den.scale(ginv)
    # common monomial factor
    low = None
    for e in list(num.terms) + list(den.terms):
        low = e if low is None else tuple(min(a, b) for a, b in zip(low, e))
    if any(low):
        num = MPoly._raw(n, {tuple(a - b for a, b in zip(e, low)): c for e, c in num.terms.items()})
        den = MPoly._raw(n, {tuple(a - b for a, b in zip(e, low)): c for e, c in den.terms.items()})
    if den.is_constant():
        c = den.constant_value()
        return num.scale(c.inverse()), MPoly.const(ONE, n)
    _, lc = den.leading_term()
    if lc.sign() < 0:
        num, den = -num, -den
    if num == den:
        return MPoly.const(ONE, n), MPoly.const(ONE, n)
    return num, den


def rf_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    raise ValueError(f"unknown operator {op!r}")


def rf_eval(f: RatFunc, b: Sequence) -> KElem:
    return f.eval(b)


def rf_subst_line(f: RatFunc, b: Sequence, d: Sequence) -> RatFunc:
    return f.subst_line(b, d)
