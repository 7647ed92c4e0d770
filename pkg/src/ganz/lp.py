"""Exact feasibility for ``A x = b, x >= 0`` over the rationals.

Phase-one simplex with Bland's rule on Fractions; small and exact, which is
all the certificate search needs.
"""

from __future__ import annotations

from fractions import Fraction


def feasible_point(A, b, max_pivots: int = 100_000):
    """Return a basic feasible ``x`` (list of Fractions) or None."""
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        row = [Fraction(a) for a in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-a for a in row]
            rhs = -rhs
        rows.append(row + [Fraction(int(j == i)) for j in range(m)] + [rhs])
    width = n + m
    basis = [n + i for i in range(m)]
    # phase-one objective: minimize the sum of artificials
    cost = [Fraction(0)] * (width + 1)
    for row in rows:
        for j in range(n):
            cost[j] -= row[j]
        cost[width] -= row[width]
    pivots = 0
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        leave = None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[width] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            break  # unbounded cannot happen in phase one
        _pivot(rows, cost, leave, enter)
        basis[leave] = enter
        pivots += 1
        if pivots > max_pivots:
            raise RuntimeError("simplex pivot budget exhausted")
    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][width]
    return x


def _pivot(rows, cost, r, c):
    prow = rows[r]
    p = prow[c]
    if p != 1:
        rows[r] = prow = [a / p for a in prow]
    for i, row in enumerate(rows):
        if i != r and row[c]:
            f = row[c]
            rows[i] = [a - f * q for a, q in zip(row, prow)]
    if cost[c]:
        f = cost[c]
        cost[:] = [a - f * q for a, q in zip(cost, prow)]
