"""Writing nonnegative rationals as sums of at most four rational squares."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


def _two_squares(n: int):
    a = isqrt(n)
    while 2 * a * a >= n:
        r = n - a * a
        s = isqrt(r)
        if s * s == r:
            return [a, s]
        a -= 1
    return None


def _is_three_square_form(n: int) -> bool:
    # Legendre: n is a sum of three squares unless n = 4^a (8b + 7)
    while n and n % 4 == 0:
        n //= 4
    return n % 8 != 7


def four_squares(n: int) -> list[int]:
    """Integers whose squares sum to ``n >= 0``; as few as the search finds."""
    if n < 0:
        raise ValueError("negative integer is not a sum of squares")
    if n == 0:
        return []
    r = isqrt(n)
    if r * r == n:
        return [r]
    two = _two_squares(n)
    if two:
        return [x for x in two if x]
    for first_count in (1, 2):
        a = isqrt(n)
        while a > 0:
            rest = n - a * a
            if first_count == 1 and _is_three_square_form(rest):
                two = _two_squares(rest)
                if two:
                    return [a] + [x for x in two if x]
            elif first_count == 2:
                b = isqrt(rest)
                while b > 0:
                    two = _two_squares(rest - b * b)
                    if two is not None:
                        return [a, b] + [x for x in two if x]
                    b -= 1
            a -= 1
    raise AssertionError(f"four-square search failed for {n}")


def rational_squares(q) -> list[Fraction]:
    """Rationals ``r_k`` with ``sum r_k^2 == q`` (at most four of them)."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("negative rational is not a sum of squares")
    # q = (num*den) / den^2
    return [Fraction(s, q.denominator) for s in four_squares(q.numerator * q.denominator)]
