"""Orders on L built from a residue-field order and a semi-section.

A semi-section ``s`` sends each value ``gamma`` to an element of that value
such that ``s(g1 + g2) / (s(g1) s(g2))`` is a square.  Given one, an order
on the residue field lifts to ``x > 0  <=>  res(x / s(v(x))) > 0``.  Choosing
``s`` so that prescribed elements with F2-independent value parities are
values of ``s`` makes those elements positive; the remaining constraints are
pushed down to the residue field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Sequence

from ganz.certificates import SetDescription, generator_value
from ganz.errors import DependentParities, GanzError, OrderNotFound
from ganz.ovf_core import INF, ONE, KElem, ValGroupElem
from ganz.ratfunc import RatFunc
from ganz.valuations import NearPoint, WeightedGauss


# F2 elimination ---------------------------------------------------------------


def _to_mask(bits) -> int:
    return sum((b & 1) << i for i, b in enumerate(bits))


@dataclass(frozen=True)
class ParityBasis:
    chosen: tuple  # 0-based indices into the input list
    combination: tuple  # per input index: chosen indices XOR-ing to its parity

    def is_chosen(self, i: int) -> bool:
        return i in self.chosen


def f2_max_independent(parities: Sequence[Sequence[int]]) -> ParityBasis:
    """Greedy left-to-right elimination; the earliest index wins each pivot."""
    rows: list[tuple[int, int]] = []  # (reduced vector, mask of chosen indices)
    chosen: list[int] = []
    combos = []
    for idx, vec in enumerate(parities):
        v = _to_mask(vec)
        mask = 0
        for r, rm in rows:
            if v & (r & -r):
                v ^= r
                mask ^= rm
        if v:
            bit = len(chosen)
            chosen.append(idx)
            mask ^= 1 << bit
            rows.append((v, mask))
            combos.append((idx,))
        else:
            combos.append(tuple(chosen[k] for k in range(len(chosen)) if mask >> k & 1))
    return ParityBasis(tuple(chosen), tuple(combos))


# semi-sections ------------------------------------------------------------------


@dataclass(frozen=True)
class SemiSection:
    valuation: object
    forced: tuple  # ((gamma, element), ...)
    extension: tuple  # ((gamma, element), ...) completing an F2 basis
    _solver: tuple = field(repr=False, default=())

    @property
    def basis(self):
        return self.forced + self.extension

    def decompose(self, delta):
        """Return ``(flags, half)`` with ``delta = sum flags_j gamma_j + 2 half``."""
        delta = ValGroupElem(delta)
        v = _to_mask(delta.parity())
        flags = 0
        for r, rm in self._solver:
            if v & (r & -r):
                v ^= r
                flags ^= rm
        if v:
            raise AssertionError("basis does not span Gamma/2Gamma")
        rest = delta
        for j, (gamma, _) in enumerate(self.basis):
            if flags >> j & 1:
                rest = rest - gamma
        return flags, rest.half()

    def __call__(self, delta) -> RatFunc:
        flags, half = self.decompose(delta)
        v = self.valuation
        out = v.base_section(half) ** 2
        for j, (_, elem) in enumerate(self.basis):
            if flags >> j & 1:
                out = out * elem
        return out

    def law_witness(self, g1, g2) -> RatFunc:
        """``w`` with ``w^2 == s(g1+g2) / (s(g1) s(g2))``."""
        g1, g2 = ValGroupElem(g1), ValGroupElem(g2)
        f1, h1 = self.decompose(g1)
        f2, h2 = self.decompose(g2)
        f12, h12 = self.decompose(g1 + g2)
        w = self.valuation.base_section(h12 - h1 - h2)
        both = f1 & f2
        for j, (_, elem) in enumerate(self.basis):
            if both >> j & 1:
                w = w / elem
        return w

    def forcing_witness(self, i: int) -> RatFunc:
        """``w`` with ``w^2 == s(gamma_i) / p_i`` for the i-th forced pair."""
        gamma, elem = self.forced[i]
        flags, half = self.decompose(gamma)
        w = self.valuation.base_section(half)
        for j, (_, e) in enumerate(self.basis):
            if j != i and flags >> j & 1:
                raise AssertionError("forced value decomposed off its own basis vector")
        return w


def _solver_rows(vectors):
    rows = []
    for j, vec in enumerate(vectors):
        v = _to_mask(vec)
        mask = 1 << j
        for r, rm in rows:
            if v & (r & -r):
                v ^= r
                mask ^= rm
        if not v:
            return None, mask
        rows.append((v, mask))
    return rows, 0


def build_semisection(v, forced) -> SemiSection:
    """Semi-section of ``v`` with ``s(gamma_i) = p_i`` for every forced pair."""
    forced = tuple((ValGroupElem(g), p) for g, p in forced)
    rows, dep = _solver_rows([g.parity() for g, _ in forced])
    if rows is None:
        combo = [i for i in range(len(forced)) if dep >> i & 1]
        raise DependentParities(combo)
    for g, p in forced:
        if v.value(p) != g:
            raise ValueError(f"value of {p} is {v.value(p)}, not {g}")
    rank = v.rank
    extension = []
    units = v.unit_generators()
    for k in range(rank):
        e = [0] * rank
        e[k] = 1
        trial, _ = _solver_rows([g.parity() for g, _ in forced + tuple(extension)] + [tuple(e)])
        if trial is not None:
            extension.append((ValGroupElem(e), units[k]))
    basis = forced + tuple(extension)
    solver, _ = _solver_rows([g.parity() for g, _ in basis])
    return SemiSection(v, forced, tuple(extension), tuple(solver))


# residue orders ---------------------------------------------------------------


@dataclass(frozen=True)
class ResidueOrder:
    """``StandardQ`` (perm is None) or a leading-term order on Q(y1..yn)."""

    perm: tuple | None = None
    signs: tuple | None = None

    @property
    def kind(self) -> str:
        return "StandardQ" if self.perm is None else "LeadingSign"

    def _poly_sign(self, p) -> int:
        if not p.terms:
            return 0
        perm, signs = self.perm, self.signs
        e = max(p.terms, key=lambda e: tuple(e[i] for i in perm))
        s = p.terms[e].sign()
        for i, k in enumerate(e):
            if k % 2 and signs[i] < 0:
                s = -s
        return s

    def sign(self, r) -> int:
        if isinstance(r, (Fraction, int, KElem)):
            return (r > 0) - (r < 0) if not isinstance(r, KElem) else r.sign()
        if self.perm is None:
            if not r.is_constant():
                raise ValueError("StandardQ only orders constant residues")
            return r.constant_value().sign()
        return self._poly_sign(r.num) * self._poly_sign(r.den)

    def __str__(self):
        if self.perm is None:
            return "StandardQ"
        order = " >> ".join(f"{'-' if self.signs[i] < 0 else ''}y{i + 1}" for i in self.perm)
        return f"LeadingSign({order} >> 1)"


STANDARD_Q = ResidueOrder()


def residue_order_catalog(v, cap: int = 384):
    if isinstance(v, NearPoint) or v.nvars == 0:
        return [STANDARD_Q]
    n = v.nvars
    out = []
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            out.append(ResidueOrder(perm, signs))
            if len(out) >= cap:
                return out
    return out


# orders on L -------------------------------------------------------------------


@dataclass(frozen=True)
class OrderHandle:
    valuation: object
    semisection: SemiSection
    residue_order: ResidueOrder

    def unit_part(self, f: RatFunc):
        return f / self.semisection(self.valuation.value(f))

    def sign(self, f: RatFunc) -> int:
        if f.is_zero():
            return 0
        return self.residue_order.sign(self.valuation.residue(self.unit_part(f)))

    def less(self, f: RatFunc, g: RatFunc) -> bool:
        return self.sign(g - f) > 0


def baer_krull_order(v, s: SemiSection, ro: ResidueOrder) -> OrderHandle:
    return OrderHandle(v, s, ro)


# the sufficiency pipeline ------------------------------------------------------


@dataclass(frozen=True)
class EvenCaseResult:
    order: ResidueOrder | None
    residues: tuple  # (index, normalized product, residue)


def _even_products(v, s: SetDescription, basis: ParityBasis):
    out = []
    for i, p in enumerate(s.p):
        if basis.is_chosen(i):
            continue
        q = RatFunc(p)
        for j in basis.combination[i]:
            q = q * RatFunc(s.p[j])
        gamma = v.value(q)
        c = v.base_section(gamma.half())
        out.append((i, q, v.residue(q / (c * c))))
    return out


def even_case_order_search(v, s: SetDescription, basis: ParityBasis, cap: int = 384) -> EvenCaseResult:
    residues = tuple(_even_products(v, s, basis))
    for ro in residue_order_catalog(v, cap):
        if all(ro.sign(r) > 0 for _, _, r in residues):
            return EvenCaseResult(ro, residues)
    return EvenCaseResult(None, residues)


class HypothesisViolated(GanzError, ValueError):
    pass


@dataclass(frozen=True)
class PipelineResult:
    order: OrderHandle
    basis: ParityBasis
    values: tuple
    residues: tuple
    signs: tuple


def sufficiency_pipeline(v, s: SetDescription, generators=(), cap: int = 384) -> PipelineResult:
    """Build an order compatible with ``v`` making every ``p_i`` positive.

    ``generators`` is a finite list of cone certificates whose generators
    ``1/(1+f)`` are checked to lie in the valuation ring, together with the
    extra generators ``g_j``; only that finite spot-check of the algebra
    hypothesis is performed.
    """
    for g in s.g:
        val = v.value(g)
        if val is not INF and val < ValGroupElem.zero(v.rank):
            raise HypothesisViolated(f"extra generator {g} has negative value {val}")
    for cert in generators:
        gv = generator_value(cert, s)
        val = v.value(gv)
        if val is not INF and val < ValGroupElem.zero(v.rank):
            raise HypothesisViolated(f"generator {gv} has negative value {val}")
    values = tuple(v.value(RatFunc(p)) for p in s.p)
    for i, val in enumerate(values):
        if val is INF:
            raise HypothesisViolated(f"p{i + 1} is identically zero, so the set is empty")
    basis = f2_max_independent([g.parity() for g in values])
    even = even_case_order_search(v, s, basis, cap)
    if even.order is None:
        raise OrderNotFound(even.residues)
    semi = build_semisection(v, [(values[i], RatFunc(s.p[i])) for i in basis.chosen])
    order = baer_krull_order(v, semi, even.order)
    signs = tuple(order.sign(RatFunc(p)) for p in s.p)
    if any(sg != 1 for sg in signs):
        raise AssertionError(f"pipeline order fails positivity: {signs}")
    return PipelineResult(order, basis, values, even.residues, signs)


__all__ = [
    "ParityBasis", "f2_max_independent", "SemiSection", "build_semisection",
    "ResidueOrder", "STANDARD_Q", "residue_order_catalog", "OrderHandle",
    "baer_krull_order", "even_case_order_search", "EvenCaseResult",
    "sufficiency_pipeline", "PipelineResult", "HypothesisViolated",
    "WeightedGauss", "ONE",
]
