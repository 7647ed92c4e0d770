# cython: language_level=3, boundscheck=False
"""Compiled kernels for dense univariate integer polynomials.

Same contract as ``ganz._pykernels``.  Multiplication takes a C ``long long``
path whenever the coefficient bit lengths guarantee no overflow and falls
back to Python integers otherwise.
"""

from libc.stdlib cimport malloc, free
from math import gcd

BACKEND = "cython"


cpdef tuple trim(object a):
    cdef Py_ssize_t n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


cpdef tuple padd(tuple a, tuple b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    cdef list out
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    out = list(a)
    for i in range(lb):
        out[i] = out[i] + b[i]
    if la == lb:
        return trim(out)
    return tuple(out)


cpdef tuple psub(tuple a, tuple b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    cdef list out = list(a)
    if lb > la:
        out.extend([0] * (lb - la))
    for i in range(lb):
        out[i] = out[i] - b[i]
    return trim(out)


cpdef tuple pneg(tuple a):
    return tuple([-c for c in a])


cpdef tuple pscale(tuple a, object c):
    if not c:
        return ()
    return tuple([c * x for x in a])


cdef inline int _bits(tuple a):
    cdef int best = 0, b
    for x in a:
        b = (<object>x).bit_length()
        if b > best:
            best = b
    return best


cdef tuple _pmul_small(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j, n = la + lb - 1
    cdef long long *x = <long long *>malloc(la * sizeof(long long))
    cdef long long *y = <long long *>malloc(lb * sizeof(long long))
    cdef long long *z = <long long *>malloc(n * sizeof(long long))
    cdef long long xi
    try:
        for i in range(la):
            x[i] = a[i]
        for j in range(lb):
            y[j] = b[j]
        for i in range(n):
            z[i] = 0
        for i in range(la):
            xi = x[i]
            if xi:
                for j in range(lb):
                    z[i + j] += xi * y[j]
        while n and z[n - 1] == 0:
            n -= 1
        return tuple([z[i] for i in range(n)])
    finally:
        free(x)
        free(y)
        free(z)


cpdef tuple pmul(tuple a, tuple b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef list out
    cdef int budget
    if not la or not lb:
        return ()
    if la == 1:
        return pscale(b, a[0])
    if lb == 1:
        return pscale(a, b[0])
    budget = _bits(a) + _bits(b) + (<object>min(la, lb)).bit_length()
    if budget < 62:
        return _pmul_small(a, b)
    out = [0] * (la + lb - 1)
    for i in range(la):
        x = a[i]
        if x:
            for j in range(lb):
                out[i + j] += x * b[j]
    return trim(out)


cpdef tuple ppow(tuple a, long k):
    cdef tuple result = (1,)
    cdef tuple base = a
    while k:
        if k & 1:
            result = pmul(result, base)
        k >>= 1
        if k:
            base = pmul(base, base)
    return result


cpdef object pcontent(tuple a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


cpdef tuple pdivint(tuple a, object c):
    return tuple([x // c for x in a])


cpdef Py_ssize_t pord(tuple a):
    cdef Py_ssize_t i
    for i in range(len(a)):
        if a[i]:
            return i
    return -1


cpdef tuple pprem(tuple a, tuple b):
    cdef Py_ssize_t db = len(b) - 1, shift, i
    cdef list r = list(a)
    lb = b[-1]
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i in range(db + 1):
            r[i + shift] = r[i + shift] - lr * b[i]
        r = list(trim(r))
    return tuple(r)


cpdef tuple pprimitive(tuple a):
    if not a:
        return ()
    c = pcontent(a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return a
    return tuple([x // c for x in a])


cpdef tuple pgcd(tuple a, tuple b):
    cdef Py_ssize_t k
    if not a:
        return pprimitive(b)
    if not b:
        return pprimitive(a)
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


cpdef tuple pdivexact(tuple a, tuple b):
    cdef Py_ssize_t db, k, i
    cdef list r, q
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
            for i in range(db + 1):
                r[k + i] = r[k + i] - qc * b[i]
    return trim(q)


cpdef tuple eval_terms(object terms, object nums, object dens, object degs):
    cdef Py_ssize_t n = len(nums), i, e, d, k
    cdef list num_pows = [], den_pows = [], np_, dp
    cdef tuple total = (), acc
    for i in range(n):
        np_ = [(1,)]
        dp = [(1,)]
        for k in range(degs[i]):
            np_.append(pmul(np_[-1], nums[i]))
            dp.append(pmul(dp[-1], dens[i]))
        num_pows.append(np_)
        den_pows.append(dp)
    for exps, coef in terms:
        acc = coef
        for i in range(n):
            e = exps[i]
            d = degs[i]
            if e:
                acc = pmul(acc, (<list>num_pows[i])[e])
            if d - e:
                acc = pmul(acc, (<list>den_pows[i])[d - e])
        total = padd(total, acc)
    return total
