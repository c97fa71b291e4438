# cython: language_level=3
"""Compiled twin of qcharsum._kernel_py (same contracts, same outputs).

Coefficients stay arbitrary-precision Python ints; Cython removes the
interpreter overhead of the index loops, which is where the time goes for
the dense degree <= ~200 polynomials this package works with.
"""

from math import gcd


def zz_strip(list a):
    while a and a[len(a) - 1] == 0:
        a.pop()
    return a


def zz_add(a, b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    if la < lb:
        a, b = b, a
        la, lb = lb, la
    cdef list out = list(a)
    for i in range(lb):
        out[i] = out[i] + b[i]
    return zz_strip(out)


def zz_sub(a, b):
    cdef Py_ssize_t i, la = len(a), lb = len(b)
    cdef list out = list(a)
    if lb > la:
        out.extend([0] * (lb - la))
    for i in range(lb):
        out[i] = out[i] - b[i]
    return zz_strip(out)


def zz_neg(a):
    return [-c for c in a]


def zz_mul(a, b):
    cdef Py_ssize_t i, j, la = len(a), lb = len(b)
    if la == 0 or lb == 0:
        return []
    cdef list out = [0] * (la + lb - 1)
    cdef object ai
    for i in range(la):
        ai = a[i]
        if ai != 0:
            for j in range(lb):
                out[i + j] = out[i + j] + ai * b[j]
    return zz_strip(out)


def zz_mul_scalar(a, s):
    if s == 0:
        return []
    return [c * s for c in a]


def zz_content(a):
    cdef object g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def zz_primitive(a):
    if not a:
        return 0, []
    g = zz_content(a)
    if g == 1:
        return 1, list(a)
    return g, [c // g for c in a]


def zz_divexact(a, b):
    cdef Py_ssize_t la = len(a), lb = len(b), k, j
    if lb == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if la == 0:
        return []
    if la < lb:
        raise ValueError("inexact polynomial division")
    cdef list r = list(a)
    cdef object bl = b[lb - 1]
    cdef list q = [0] * (la - lb + 1)
    cdef object c, t
    for k in range(la - lb, -1, -1):
        c = r[k + lb - 1]
        if c != 0:
            if c % bl:
                raise ValueError("inexact polynomial division")
            t = c // bl
            q[k] = t
            for j in range(lb):
                r[k + j] = r[k + j] - t * b[j]
    for c in r:
        if c != 0:
            raise ValueError("inexact polynomial division")
    return zz_strip(q)


def zz_prem(a, b):
    cdef Py_ssize_t db, off, i, j
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef list r = list(a)
    db = len(b) - 1
    cdef object bl = b[db]
    cdef object lead
    while r and len(r) - 1 >= db:
        lead = r[len(r) - 1]
        off = len(r) - 1 - db
        if bl != 1:
            for i in range(len(r)):
                r[i] = r[i] * bl
        for j in range(db + 1):
            r[off + j] = r[off + j] - lead * b[j]
        zz_strip(r)
    return r


def zz_gcd(a, b):
    cdef Py_ssize_t va, vb, v
    cdef list f, g, r
    if not a:
        f = list(b)
    elif not b:
        f = list(a)
    else:
        va = 0
        while a[va] == 0:
            va += 1
        vb = 0
        while b[vb] == 0:
            vb += 1
        v = va if va < vb else vb
        f = list(a[va:])
        g = list(b[vb:])
        _, f = zz_primitive(f)
        _, g = zz_primitive(g)
        if len(f) < len(g):
            f, g = g, f
        while g:
            r = zz_prem(f, g)
            _, r = zz_primitive(r)
            f, g = g, r
        f = [0] * v + f
    _, f = zz_primitive(f)
    if f and f[len(f) - 1] < 0:
        f = [-c for c in f]
    return f
