"""Certificates for positive-cone membership and integral-radical membership.

Sets are ``S = {b : p_i(b) > 0 for all i, v(g_j(b)) >= 0 for all j}``.  A
cone certificate is ``sum_J r_J * prod_{i in J} p_i`` with each ``r_J`` an
explicit sum of squares; subsets ``J`` use 1-based indices into ``p``.  The
algebra ``A`` is generated over the valuation ring of K by the functions
``1/(1 + f_k)`` for cone elements ``f_k`` together with the ``g_j``.  A
radical certificate for ``h`` is a monic polynomial whose coefficients lie in
the localization of ``A`` at ``1 + m*a`` (``m`` infinitesimal) and which
vanishes at ``h``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Mapping, Sequence

from ganz import lp
from ganz.errors import (
    BudgetExceeded,
    IdenticallyMinusOne,
    IndexOutOfRange,
    StructuralError,
)
from ganz.ovf_core import INF, ONE, ZERO, KElem
from ganz.ratfunc import MPoly, RatFunc, _common_denominator, as_point
from ganz.squares import rational_squares


@dataclass(frozen=True)
class SetDescription:
    p: tuple = ()
    g: tuple = ()
    nvars: int = 0

    def __post_init__(self):
        ps = []
        for q in self.p:
            if isinstance(q, RatFunc):
                q = q.as_poly()
            if q.nvars != self.nvars:
                q = q.embed(self.nvars)
            ps.append(q)
        gs = []
        for q in self.g:
            if isinstance(q, MPoly):
                q = RatFunc(q)
            if q.nvars != self.nvars:
                q = q.embed(self.nvars)
            gs.append(q)
        object.__setattr__(self, "p", tuple(ps))
        object.__setattr__(self, "g", tuple(gs))

    def contains(self, b) -> bool:
        """Exact membership; points where some ``g_j`` is undefined are excluded."""
        b = as_point(b)
        if any(q.eval(b).sign() <= 0 for q in self.p):
            return False
        for q in self.g:
            try:
                v = q.eval(b).valuation()
            except ArithmeticError:
                return False
            if v is not INF and v < 0:
                return False
        return True


@dataclass(frozen=True)
class SOS:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("a sum of squares needs at least one part")

    def value(self) -> RatFunc:
        total = None
        for q in self.parts:
            total = q * q if total is None else total + q * q
        return total

    def value_at(self, b) -> KElem:
        total = ZERO
        for q in self.parts:
            v = q.eval(b)
            total = total + v * v
        return total


@dataclass(frozen=True)
class ConeCert:
    """``terms`` pairs a sorted tuple of 1-based indices with its SOS block."""

    terms: tuple = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping) -> ConeCert:
        merged: dict = {}
        for J, sos in mapping.items():
            J = tuple(sorted(set(J)))
            if not isinstance(sos, SOS):
                sos = SOS(tuple(sos))
            if J in merged:
                merged[J] = SOS(merged[J].parts + sos.parts)
            else:
                merged[J] = sos
        return cls(tuple(sorted(merged.items(), key=lambda kv: (len(kv[0]), kv[0]))))

    def check_indices(self, s: SetDescription):
        m = len(s.p)
        for J, _ in self.terms:
            for i in J:
                if not 1 <= i <= m:
                    raise IndexOutOfRange(f"subset index {i} outside 1..{m}")


def _subset_product(s: SetDescription, J) -> MPoly:
    out = MPoly.const(ONE, s.nvars)
    for i in J:
        out = out * s.p[i - 1]
    return out


def cone_value(cert: ConeCert, s: SetDescription) -> RatFunc:
    cert.check_indices(s)
    total = RatFunc.const(ZERO, s.nvars)
    for J, sos in cert.terms:
        total = total + sos.value() * RatFunc(_subset_product(s, J))
    return total


def verify_cone_pointwise(cert: ConeCert, s: SetDescription, b) -> bool:
    """Every term of the certificate is nonnegative at ``b`` in S."""
    cert.check_indices(s)
    b = as_point(b)
    pvals = [q.eval(b) for q in s.p]
    if any(v.sign() <= 0 for v in pvals):
        raise ValueError("point does not satisfy the strict inequalities")
    ok = True
    for J, sos in cert.terms:
        v = sos.value_at(b)
        for i in J:
            v = v * pvals[i - 1]
        ok = ok and v.sign() >= 0
    return ok


def generator_value(cert: ConeCert, s: SetDescription) -> RatFunc:
    one_plus = cone_value(cert, s) + 1
    if one_plus.is_zero():
        raise IdenticallyMinusOne("cone value is identically -1")
    return one_plus.inverse()


# the algebra, its localization and radical certificates ---------------------


@dataclass(frozen=True)
class AlgebraElem:
    """Polynomial in the generator symbols with coefficients in O_K.

    Symbol ``k`` (0-based) is the k-th cone generator ``1/(1+f_k)`` for
    ``k < len(generators)``, then the extra generators ``g_j`` in order.
    """

    poly: tuple = ()  # ((exponents, KElem), ...)

    @classmethod
    def from_mapping(cls, mapping: Mapping) -> AlgebraElem:
        return cls(tuple((tuple(e), KElem.coerce(c)) for e, c in mapping.items() if KElem.coerce(c)))

    @classmethod
    def constant(cls, c, nsymbols: int) -> AlgebraElem:
        return cls.from_mapping({(0,) * nsymbols: c})

    def check(self, nsymbols: int):
        for e, c in self.poly:
            if len(e) != nsymbols:
                raise StructuralError(f"monomial {list(e)} does not have {nsymbols} exponents")
            if any(k < 0 for k in e):
                raise StructuralError(f"negative exponent in {list(e)}")
            v = c.valuation()
            if v is not INF and v < 0:
                raise StructuralError(f"coefficient {c} is not in the valuation ring")

    def value(self, symbols: Sequence[RatFunc], nvars: int) -> RatFunc:
        total = RatFunc.const(ZERO, nvars)
        for e, c in self.poly:
            term = RatFunc.const(c, nvars)
            for sym, k in zip(symbols, e):
                if k:
                    term = term * sym ** k
            total = total + term
        return total


@dataclass(frozen=True)
class LocalizedElem:
    """``a / (1 + t_m * t_a)`` with ``t_m`` infinitesimal in K."""

    a: AlgebraElem
    t_m: KElem = ZERO
    t_a: AlgebraElem = field(default_factory=AlgebraElem)

    def check(self, nsymbols: int):
        self.a.check(nsymbols)
        self.t_a.check(nsymbols)
        v = KElem.coerce(self.t_m).valuation()
        if v is not INF and v <= 0:
            raise StructuralError(f"t_m = {self.t_m} is not infinitesimal")

    def value(self, symbols, nvars: int) -> RatFunc:
        num = self.a.value(symbols, nvars)
        if not self.t_m:
            return num
        den = self.t_a.value(symbols, nvars) * RatFunc.const(self.t_m, nvars) + 1
        if den.is_zero():
            raise StructuralError("localizing denominator is identically zero")
        return num / den


@dataclass(frozen=True)
class RadicalCert:
    """``Y^n + sum_{i<n} coeffs[i] * Y^i`` vanishing at ``h``."""

    h: RatFunc
    generators: tuple  # ConeCert per cone generator symbol
    coeffs: tuple  # LocalizedElem, length n >= 1

    @property
    def degree(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class Verdict:
    valid: bool
    residual: RatFunc

    def __bool__(self):
        return self.valid

    def __str__(self):
        return "Valid" if self.valid else f"Invalid (residual {self.residual})"


def algebra_symbols(generators: Sequence[ConeCert], s: SetDescription) -> list[RatFunc]:
    return [generator_value(c, s) for c in generators] + list(s.g)


def check_radical_structure(cert: RadicalCert, s: SetDescription):
    if not cert.coeffs:
        raise StructuralError("a monic certificate needs degree at least 1")
    if cert.h.nvars != s.nvars:
        raise StructuralError("h lives in a different number of variables")
    for gen in cert.generators:
        try:
            gen.check_indices(s)
        except IndexOutOfRange as exc:
            raise StructuralError(str(exc)) from exc
    nsym = len(cert.generators) + len(s.g)
    for c in cert.coeffs:
        c.check(nsym)


def verify_radical_cert(cert: RadicalCert, s: SetDescription) -> Verdict:
    """Structural checks first, then the exact identity ``P(h) == 0``."""
    check_radical_structure(cert, s)
    try:
        symbols = algebra_symbols(cert.generators, s)
    except IdenticallyMinusOne as exc:
        raise StructuralError(str(exc)) from exc
    h = cert.h
    acc = RatFunc.const(ONE, s.nvars)
    for c in reversed(cert.coeffs):
        acc = acc * h + c.value(symbols, s.nvars)
    return Verdict(acc.is_zero(), acc)


# Handelman-style search ------------------------------------------------------


def _exponent_vectors(degs, bound):
    m = len(degs)
    caps = [bound // d if d > 0 else max(bound, 1) for d in degs]

    def rec(i, left):
        if i == m:
            yield ()
            return
        d = degs[i]
        top = min(caps[i], left // d) if d > 0 else caps[i]
        for a in range(top + 1):
            for rest in rec(i + 1, left - a * d):
                yield (a,) + rest

    yield from rec(0, bound)


def handelman_search(
    s: SetDescription,
    target,
    degree_bound: int,
    max_products: int = 2000,
    max_rows: int = 5000,
) -> ConeCert | None:
    """Look for ``target = sum lambda_a prod p_i^a_i`` with rational ``lambda >= 0``.

    Returns a certificate (re-verified exactly) or None when the bounded LP
    is infeasible.  None is not a proof of non-membership.
    """
    if isinstance(target, RatFunc):
        target = target.as_poly()
    if target.nvars != s.nvars:
        target = target.embed(s.nvars)
    if degree_bound < target.degree():
        raise ValueError("degree bound is below the degree of the target")
    degs = [q.degree() for q in s.p]
    vectors = []
    for a in _exponent_vectors(degs, degree_bound):
        vectors.append(a)
        if len(vectors) > max_products:
            raise BudgetExceeded(f"more than {max_products} products")
    products = []
    cache = {(0,) * len(s.p): MPoly.const(ONE, s.nvars)}
    for a in vectors:
        if a not in cache:
            i = max(k for k, x in enumerate(a) if x)
            prev = a[:i] + (a[i] - 1,) + a[i + 1:]
            cache[a] = cache[prev] * s.p[i]
        products.append(cache[a])

    dens = [c.den for q in products + [target] for c in q.terms.values()]
    D = KElem(_common_denominator(dens))
    keys: dict = {}

    def column(q: MPoly):
        col = {}
        for e, c in q.terms.items():
            for k, x in enumerate((c * D).num):
                if x:
                    col[(e, k)] = x
                    keys.setdefault((e, k), len(keys))
        return col

    cols = [column(q) for q in products]
    rhs = column(target)
    if len(keys) > max_rows:
        raise BudgetExceeded(f"LP has {len(keys)} rows")
    A = [[0] * len(cols) for _ in keys]
    b = [0] * len(keys)
    for j, col in enumerate(cols):
        for key, x in col.items():
            A[keys[key]][j] = x
    for key, x in rhs.items():
        b[keys[key]] = x
    if not keys:
        return ConeCert()
    x = lp.feasible_point(A, b)
    if x is None:
        return None
    mapping: dict = {}
    for a, lam in zip(vectors, x):
        if not lam:
            continue
        J = tuple(i + 1 for i, k in enumerate(a) if k % 2)
        half = MPoly.const(ONE, s.nvars)
        for i, k in enumerate(a):
            if k >= 2:
                half = half * s.p[i] ** (k // 2)
        parts = [RatFunc(half.scale(KElem.coerce(r))) for r in rational_squares(lam)]
        mapping.setdefault(J, []).extend(parts)
    cert = ConeCert.from_mapping(mapping)
    if cone_value(cert, s) != RatFunc(target):
        raise AssertionError("search produced a certificate that does not re-verify")
    return cert


__all__ = [
    "SetDescription", "SOS", "ConeCert", "AlgebraElem", "LocalizedElem",
    "RadicalCert", "Verdict", "cone_value", "verify_cone_pointwise",
    "generator_value", "verify_radical_cert", "handelman_search",
    "algebra_symbols", "check_radical_structure", "Fraction", "iproduct",
]
