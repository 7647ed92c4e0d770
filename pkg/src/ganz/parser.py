"""Recursive-descent parser and canonical printer for expressions.

Grammar::

    expr   := term (("+" | "-") term)* ;
    term   := factor (("*" | "/") factor)* ;
    factor := "-" factor | base ("^" nat)? ;
    base   := rational | "eps" | var | "(" expr ")" ;
    var    := "x" nat ;   rational := nat ("/" nat)? ;

A ``nat "/" nat`` pair is read greedily as one rational literal, so
``3/4^2`` is ``(3/4)^2``.  The printer never emits text where that matters.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple

from ganz.errors import DivisionByZero, ParseError
from ganz.ovf_core import EPS, KElem, format_eps_poly
from ganz.ratfunc import MPoly, RatFunc, _common_denominator

_TOKEN = re.compile(r"\s*(?:(\d+)|(eps)|x(\d+)|([-+*/^()]))")


class Token(NamedTuple):
    kind: str  # "nat", "eps", "var", "op", "end"
    value: object
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(0) + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group(1) is not None:
            tokens.append(Token("nat", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(Token("eps", None, start))
        elif m.group(3) is not None:
            idx = int(m.group(3))
            if idx < 1:
                raise ParseError("variables are numbered from x1", start)
            tokens.append(Token("var", idx, start))
        else:
            tokens.append(Token("op", m.group(4), start))
        pos = m.end()
        if m.group(2) is not None and pos < n and (text[pos].isalnum() or text[pos] == "_"):
            raise ParseError("unexpected identifier", start)
    tokens.append(Token("end", None, n))
    return tokens


def max_var_index(text: str) -> int:
    """Largest ``k`` such that ``xk`` occurs in ``text`` (0 if none)."""
    return max((t.value for t in tokenize(text) if t.kind == "var"), default=0)


class _Parser:
    def __init__(self, text: str, nvars: int):
        self.tokens = tokenize(text)
        self.i = 0
        self.nvars = nvars

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def _is_op(self, op, offset=0):
        t = self.tokens[self.i + offset] if self.i + offset < len(self.tokens) else None
        return t is not None and t.kind == "op" and t.value == op

    def expect_op(self, op):
        if not self._is_op(op):
            raise ParseError(f"expected {op!r}", self.tok.pos)
        self.i += 1

    def parse(self) -> RatFunc:
        value = self.expr()
        if self.tok.kind != "end":
            raise ParseError("unexpected trailing input", self.tok.pos)
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while self._is_op("+") or self._is_op("-"):
            op = self.tok.value
            self.i += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RatFunc:
        value = self.factor()
        while self._is_op("*") or self._is_op("/"):
            op = self.tok.value
            pos = self.tok.pos
            self.i += 1
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise DivisionByZero(f"division by zero at position {pos}")
                value = value / rhs
        return value

    def factor(self) -> RatFunc:
        if self._is_op("-"):
            self.i += 1
            return -self.factor()
        value = self.base()
        if self._is_op("^"):
            self.i += 1
            t = self.tok
            if t.kind != "nat":
                raise ParseError("exponent must be a natural number", t.pos)
            self.i += 1
            value = value ** t.value
        return value

    def base(self) -> RatFunc:
        t = self.tok
        if t.kind == "nat":
            self.i += 1
            num = t.value
            if self._is_op("/") and self.tokens[self.i + 1].kind == "nat":
                den = self.tokens[self.i + 1].value
                if den == 0:
                    raise DivisionByZero(f"zero denominator at position {self.tokens[self.i + 1].pos}")
                self.i += 2
                return RatFunc.const(KElem.coerce(Fraction(num, den)), self.nvars)
            return RatFunc.const(KElem.coerce(num), self.nvars)
        if t.kind == "eps":
            self.i += 1
            return RatFunc.const(EPS, self.nvars)
        if t.kind == "var":
            if t.value > self.nvars:
                raise ParseError(f"x{t.value} exceeds the {self.nvars} ambient variables", t.pos)
            self.i += 1
            return RatFunc.var(t.value - 1, self.nvars)
        if self._is_op("("):
            self.i += 1
            value = self.expr()
            self.expect_op(")")
            return value
        if t.kind == "end":
            raise ParseError("unexpected end of input", t.pos)
        raise ParseError(f"unexpected token {t.value!r}", t.pos)


def parse(text: str, nvars: int | None = None) -> RatFunc:
    """Parse ``text`` into a rational function in ``nvars`` variables.

    ``nvars`` defaults to the largest variable index occurring in ``text``.
    """
    if nvars is None:
        nvars = max_var_index(text)
    return _Parser(text, nvars).parse()


def parse_kelem(text: str) -> KElem:
    f = parse(text, 0)
    return f.constant_value()


def parse_point(text: str) -> tuple:
    """Parse ``"expr,expr,..."`` into a tuple of KElem coordinates."""
    if not text.strip():
        return ()
    return tuple(parse_kelem(part) for part in text.split(","))


rf_parse = parse

# printing ------------------------------------------------------------------


def _is_simple(c: KElem) -> bool:
    """True when ``c`` prints as a single nonnegative factor."""
    if c.sign() < 0:
        return False
    if c.is_rational():
        return True
    return len(c.den) == 1 and sum(1 for a in c.num if a) == 1 and c.den == (1,)


def _monomial(e) -> str:
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(f"x{i + 1}")
        elif k > 1:
            parts.append(f"x{i + 1}^{k}")
    return "*".join(parts)


def _signed_term(c: KElem, e):
    """Return (negative?, body) for the term ``c * x^e``."""
    mono = _monomial(e)
    neg = c.sign() < 0
    mag = -c if neg else c
    if not mono:
        body = str(mag)
        if not _is_simple(mag) and not (mag.is_rational()):
            body = f"({body})"
        return neg, body
    if mag == 1:
        return neg, mono
    if _is_simple(mag):
        return neg, f"{mag}*{mono}"
    return neg, f"({mag})*{mono}"


def format_mpoly(p: MPoly) -> str:
    if not p.terms:
        return "0"
    if p.is_constant():
        return str(p.constant_value())
    out = []
    for e in sorted(p.terms, key=lambda e: (sum(e), e), reverse=True):
        neg, body = _signed_term(p.terms[e], e)
        if not out:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def _nterms(p: MPoly) -> int:
    return len(p.terms)


def format_ratfunc(f: RatFunc) -> str:
    if f.den.is_constant():
        poly = f.as_poly()
        D = _common_denominator([c.den for c in poly.terms.values()])
        if len(D) == 1 or poly.is_constant():
            return format_mpoly(poly)
        num = format_mpoly(poly.scale(KElem(D)))
        return f"({num})/({format_eps_poly(D)})"
    num = format_mpoly(f.num)
    if not _bare_numerator(f.num):
        num = f"({num})"
    den = format_mpoly(f.den)
    if not _single_power(f.den):
        den = f"({den})"
    return f"{num}/{den}"


def _single_power(p: MPoly) -> bool:
    """``x_i`` or ``x_i^k`` with coefficient 1: safe to print after ``/``."""
    if len(p.terms) != 1:
        return False
    (e, c), = p.terms.items()
    return c == 1 and sum(1 for k in e if k) == 1


def _bare_numerator(p: MPoly) -> bool:
    if len(p.terms) != 1:
        return False
    (e, c), = p.terms.items()
    if not any(e):
        return c.is_rational() and c.to_fraction().denominator == 1
    return c == 1


def format_point(point) -> str:
    return ",".join(str(c) for c in point)
