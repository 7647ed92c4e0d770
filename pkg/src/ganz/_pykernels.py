"""Pure-Python kernels for dense univariate polynomials over the integers.

A polynomial is a tuple of ints in ascending degree with no trailing zeros;
the zero polynomial is ``()``.  These routines back the arithmetic of
``KElem`` (polynomials in eps) and the evaluation of multivariate
polynomials at points with eps-rational coordinates.  The compiled module
``_kernels`` exposes the same functions with the same semantics.
"""

from math import gcd

BACKEND = "python"


def trim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def psub(a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def pneg(a):
    return tuple(-c for c in a)


def pscale(a, c):
    if not c:
        return ()
    return tuple(c * x for x in a)


def pmul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        return pscale(b, a[0])
    if len(b) == 1:
        return pscale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out)


def ppow(a, k):
    result = (1,)
    base = a
    while k:
        if k & 1:
            result = pmul(result, base)
        k >>= 1
        if k:
            base = pmul(base, base)
    return result


def pcontent(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def pdivint(a, c):
    """Divide every coefficient by ``c`` (must divide exactly)."""
    return tuple(x // c for x in a)


def pord(a):
    """Index of the lowest nonzero coefficient; -1 for the zero polynomial."""
    for i, c in enumerate(a):
        if c:
            return i
    return -1


def pprem(a, b):
    """Pseudo-remainder of ``a`` by nonzero ``b``."""
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[i + shift] -= lr * c
        r = list(trim(r))
    return tuple(r)


def pprimitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return ()
    c = pcontent(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return tuple(a)
    return tuple(x // c for x in a)


def pgcd(a, b):
    """Primitive gcd of ``a`` and ``b`` in Z[e] (content dropped, lead > 0)."""
    if not a:
        return pprimitive(b)
    if not b:
        return pprimitive(a)
    # common power of e handled separately keeps the PRS short
    k = min(pord(a), pord(b))
    a = pprimitive(a[pord(a):])
    b = pprimitive(b[pord(b):])
    if len(a) < len(b):
        a, b = b, a
    while len(b) > 1:
        r = pprem(a, b)
        a, b = b, pprimitive(r)
    if len(b) == 1:
        g = (1,)
    else:
        g = a
    return (0,) * k + g


def pdivexact(a, b):
    """Quotient of ``a`` by ``b`` in Z[e], assuming ``b`` divides ``a``."""
    if not a:
        return ()
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if c:
            qc = c // lb
            q[k] = qc
            for i, y in enumerate(b):
                r[k + i] -= qc * y
    return trim(q)


def eval_terms(terms, nums, dens, degs):
    """Evaluate a polynomial at a point with coordinates ``nums[i]/dens[i]``.

    ``terms`` is a sequence of ``(exponent_tuple, coefficient_poly)`` pairs
    and ``degs[i]`` bounds the exponent of variable ``i``.  Returns the
    numerator ``sum c * prod nums[i]^e_i * dens[i]^(degs[i]-e_i)``; the
    denominator is ``prod dens[i]^degs[i]`` and is left to the caller.
    """
    n = len(nums)
    num_pows = []
    den_pows = []
    for i in range(n):
        np_ = [(1,)]
        dp = [(1,)]
        for _ in range(degs[i]):
            np_.append(pmul(np_[-1], nums[i]))
            dp.append(pmul(dp[-1], dens[i]))
        num_pows.append(np_)
        den_pows.append(dp)
    total = ()
    for exps, coef in terms:
        acc = coef
        for i in range(n):
            e = exps[i]
            d = degs[i]
            if e:
                acc = pmul(acc, num_pows[i][e])
            if d - e:
                acc = pmul(acc, den_pows[i][d - e])
        total = padd(total, acc)
    return total
