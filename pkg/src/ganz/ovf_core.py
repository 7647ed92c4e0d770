"""The base ordered valued field K = Q(eps).

Elements are ratios of integer polynomials in ``eps``.  The valuation is the
eps-adic order, and the order makes ``eps`` a positive infinitesimal: the sign
of an element is the sign of the product of the lowest-degree coefficients of
numerator and denominator.  With these choices K is an ordered valued field
with value group Z and residue field Q.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import gcd

from ganz import kernels as kn
from ganz.errors import DivisionByZero, NegativeValuation

Rat = Fraction


class Infinity:
    """The valuation of zero; larger than every value group element."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("ganz-infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__


INF = Infinity()


class ValGroupElem(tuple):
    """Element of Z^r, ordered lexicographically (first coordinate dominates).

    Tuple comparison already is lexicographic, so only the group operations
    are overridden.
    """

    def __new__(cls, coords):
        return super().__new__(cls, (int(c) for c in coords))

    @property
    def rank(self) -> int:
        return len(self)

    def __add__(self, other):
        if other is INF:
            return INF
        _same_rank(self, other)
        return ValGroupElem(a + b for a, b in zip(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        _same_rank(self, other)
        return ValGroupElem(a - b for a, b in zip(self, other))

    def __neg__(self):
        return ValGroupElem(-a for a in self)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return ValGroupElem(k * a for a in self)

    __rmul__ = __mul__

    def parity(self) -> tuple[int, ...]:
        return tuple(a & 1 for a in self)

    def half(self) -> ValGroupElem:
        if any(a & 1 for a in self):
            raise ValueError(f"{self!r} is not in 2*Gamma")
        return ValGroupElem(a // 2 for a in self)

    @classmethod
    def zero(cls, rank: int) -> ValGroupElem:
        return cls((0,) * rank)

    def __repr__(self):
        return "(" + ", ".join(str(a) for a in self) + ")"


def _same_rank(a, b):
    if len(a) != len(b):
        raise ValueError(f"rank mismatch: {a!r} vs {b!r}")


def _normalize(num, den):
    if not den:
        raise DivisionByZero("zero denominator in K")
    if not num:
        return (), (1,)
    if den == (1,):
        return num, den
    k = min(kn.pord(num), kn.pord(den))
    if k:
        num = num[k:]
        den = den[k:]
    if len(den) > 1 and len(num) > 1:
        g = kn.pgcd(num, den)
        if len(g) > 1:
            num = kn.pdivexact(num, g)
            den = kn.pdivexact(den, g)
    c = gcd(kn.pcontent(num), kn.pcontent(den))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = kn.pdivint(num, c)
        den = kn.pdivint(den, c)
    return num, den


@total_ordering
class KElem:
    """An element of Q(eps), stored canonically as ``num/den`` over Z[eps].

    Canonical means coprime, jointly primitive, with the top coefficient of
    ``den`` positive, so structural equality is field equality.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(1,), *, canonical=False):
        num = tuple(num)
        den = tuple(den)
        if not canonical:
            num, den = _normalize(kn.trim(num), kn.trim(den))
        self.num = num
        self.den = den

    # construction ---------------------------------------------------------

    @classmethod
    def coerce(cls, x) -> KElem:
        if isinstance(x, KElem):
            return x
        if isinstance(x, int):
            return cls((x,) if x else (), canonical=True)
        if isinstance(x, Fraction):
            if not x:
                return ZERO
            return cls((x.numerator,), (x.denominator,), canonical=True)
        raise TypeError(f"cannot coerce {type(x).__name__} to KElem")

    @classmethod
    def from_coeffs(cls, num_coeffs, den_coeffs=(1,)) -> KElem:
        """Build from rational coefficient lists (ascending powers of eps)."""
        num_coeffs = [Fraction(c) for c in num_coeffs]
        den_coeffs = [Fraction(c) for c in den_coeffs]
        lcm = 1
        for c in num_coeffs + den_coeffs:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        num = tuple(int(c * lcm) for c in num_coeffs)
        den = tuple(int(c * lcm) for c in den_coeffs)
        return cls(num, den)

    @classmethod
    def eps(cls, k: int = 1) -> KElem:
        if k >= 0:
            return cls((0,) * k + (1,), canonical=True)
        return cls((1,), (0,) * (-k) + (1,), canonical=True)

    # predicates -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_rational(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational constant")
        if not self.num:
            return Fraction(0)
        return Fraction(self.num[0], self.den[0])

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        try:
            other = KElem.coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return KElem(kn.padd(self.num, other.num), self.den)
        num = kn.padd(kn.pmul(self.num, other.den), kn.pmul(other.num, self.den))
        return KElem(num, kn.pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return KElem(kn.pneg(self.num), self.den, canonical=True)

    def __sub__(self, other):
        try:
            other = KElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return KElem.coerce(other) + (-self)

    def __mul__(self, other):
        try:
            other = KElem.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        return KElem(kn.pmul(self.num, other.num), kn.pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> KElem:
        if not self.num:
            raise DivisionByZero("inverse of zero in K")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = kn.pneg(num), kn.pneg(den)
        return KElem(num, den, canonical=True)

    def __truediv__(self, other):
        try:
            other = KElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return KElem.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return ONE
        return KElem(kn.ppow(self.num, k), kn.ppow(self.den, k))

    # valuation and order ---------------------------------------------------

    def valuation(self):
        """eps-adic order as an int, or INF for zero."""
        if not self.num:
            return INF
        return kn.pord(self.num) - kn.pord(self.den)

    def sign(self) -> int:
        if not self.num:
            return 0
        a = self.num[kn.pord(self.num)]
        b = self.den[kn.pord(self.den)]
        return 1 if (a > 0) == (b > 0) else -1

    def residue(self) -> Fraction:
        v = self.valuation()
        if v is INF or v > 0:
            return Fraction(0)
        if v < 0:
            raise NegativeValuation(f"residue of {self} with valuation {v}")
        return Fraction(self.num[kn.pord(self.num)], self.den[kn.pord(self.den)])

    def leading(self):
        """Split a nonzero element as ``coeff * eps^v`` with ``coeff`` of valuation 0."""
        v = self.valuation()
        return self * KElem.eps(-v), v

    # comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = KElem.coerce(other)
        if not isinstance(other, KElem):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if len(self.den) == 1 and len(self.num) <= 1:
            return hash(Fraction(self.num[0], self.den[0]) if self.num else 0)
        return hash((self.num, self.den))

    def __lt__(self, other):
        return (self - other).sign() < 0

    # printing -------------------------------------------------------------

    def __str__(self):
        return format_kelem(self)

    def __repr__(self):
        return f"KElem({format_kelem(self)!r})"


ZERO = KElem((), canonical=True)
ONE = KElem((1,), canonical=True)
EPS = KElem.eps(1)


def _eps_monomial(k: int) -> str:
    return "" if k == 0 else ("eps" if k == 1 else f"eps^{k}")


def format_eps_poly(p) -> str:
    """Print an integer polynomial in eps in the expression grammar."""
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if not c:
            continue
        mono = _eps_monomial(k)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


def _nterms(p) -> int:
    return sum(1 for c in p if c)


def format_kelem(a: KElem) -> str:
    if a.den == (1,):
        return format_eps_poly(a.num)
    num = format_eps_poly(a.num)
    if _nterms(a.num) > 1:
        num = f"({num})"
    den = format_eps_poly(a.den)
    if _nterms(a.den) > 1 or (len(a.den) > 1 and a.den[-1] != 1):
        den = f"({den})"
    return f"{num}/{den}"


def k_add(a, b):
    return KElem.coerce(a) + b


def k_mul(a, b):
    return KElem.coerce(a) * b


def k_div(a, b):
    return KElem.coerce(a) / b


def k_neg(a):
    return -KElem.coerce(a)


def k_val(a):
    """Valuation as a rank-1 value group element, or INF."""
    v = KElem.coerce(a).valuation()
    return INF if v is INF else ValGroupElem((v,))


def k_sign(a) -> int:
    return KElem.coerce(a).sign()


def k_res(a) -> Fraction:
    return KElem.coerce(a).residue()
