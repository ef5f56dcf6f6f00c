# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled twins of the kernels in ``_pykernels``.

Python semantics for ``//`` and ``%`` are kept (cdivision=False) because the
hyperplane arithmetic runs over negative values.
"""

from libc.stdlib cimport malloc, free


cdef inline long _floordiv(long a, long b):
    cdef long q = a // b
    return q


def hyperplane_count(x, rho, long e):
    cdef Py_ssize_t n = len(x)
    cdef Py_ssize_t a, b
    cdef long total = 0
    cdef long v0, v1
    cdef long *xs = <long *> malloc(n * sizeof(long))
    cdef long *rs = <long *> malloc(n * sizeof(long))
    if xs == NULL or rs == NULL:
        free(xs)
        free(rs)
        raise MemoryError()
    try:
        for a in range(n):
            xs[a] = x[a]
            rs[a] = rho[a]
        for a in range(n):
            for b in range(a + 1, n):
                v0 = rs[a] - rs[b]
                v1 = xs[a] + rs[a] - xs[b] - rs[b]
                if v1 > v0:
                    total += _floordiv(v1, e) - _floordiv(v0, e)
                elif v1 < v0:
                    total += _floordiv(v0 - 1, e) - _floordiv(v1 - 1, e)
        return total
    finally:
        free(xs)
        free(rs)


def in_alcove(x, rho, long e):
    cdef Py_ssize_t n = len(x)
    cdef Py_ssize_t a, b
    cdef long v0, v1
    cdef long *xs = <long *> malloc(n * sizeof(long))
    cdef long *rs = <long *> malloc(n * sizeof(long))
    if xs == NULL or rs == NULL:
        free(xs)
        free(rs)
        raise MemoryError()
    try:
        for a in range(n):
            xs[a] = x[a]
            rs[a] = rho[a]
        for a in range(n):
            for b in range(a + 1, n):
                v0 = rs[a] - rs[b]
                v1 = xs[a] + rs[a] - xs[b] - rs[b]
                if v1 > v0:
                    if _floordiv(v1, e) != _floordiv(v0, e):
                        return False
                elif v1 < v0:
                    if _floordiv(v1 - 1, e) != _floordiv(v0 - 1, e):
                        return False
        return True
    finally:
        free(xs)
        free(rs)


def path_degree(steps, rho, long e):
    cdef Py_ssize_t n = len(rho)
    cdef Py_ssize_t m = len(steps)
    cdef Py_ssize_t k, other, a, b, col
    cdef long deg = 0
    cdef long v0, before, after
    cdef long *w = <long *> malloc(n * sizeof(long))
    cdef long *rs = <long *> malloc(n * sizeof(long))
    if w == NULL or rs == NULL:
        free(w)
        free(rs)
        raise MemoryError()
    try:
        for a in range(n):
            rs[a] = rho[a]
            w[a] = rho[a]
        for k in range(m):
            col = steps[k]
            for other in range(n):
                if other == col:
                    continue
                if col < other:
                    a = col
                    b = other
                else:
                    a = other
                    b = col
                v0 = rs[a] - rs[b]
                before = w[a] - w[b]
                after = before + 1 if a == col else before - 1
                if before % e == 0 and (after - before) * (v0 - before) > 0:
                    deg += 1
                if after % e == 0 and (before - after) * (v0 - after) < 0:
                    deg -= 1
            w[col] += 1
        return deg
    finally:
        free(w)
        free(rs)


def bead_hd(cols):
    cdef Py_ssize_t n = len(cols)
    cdef Py_ssize_t a, b
    cdef long total = 0
    cdef long ca, cb
    cdef long *cs = <long *> malloc(n * sizeof(long) + 1)
    if cs == NULL:
        raise MemoryError()
    try:
        for a in range(n):
            cs[a] = cols[a]
        for a in range(n):
            ca = cs[a]
            for b in range(a + 1, n):
                cb = cs[b]
                if cb >= ca:
                    total += cb - ca
                else:
                    total += ca - cb - 1
        return total
    finally:
        free(cs)


def compositions(long total, long parts):
    if parts == 0:
        return [()] if total == 0 else []
    out = []
    cdef long *buf = <long *> malloc(parts * sizeof(long))
    cdef long *rem = <long *> malloc((parts + 1) * sizeof(long))
    cdef long i
    if buf == NULL or rem == NULL:
        free(buf)
        free(rem)
        raise MemoryError()
    try:
        # iterative odometer in lexicographically descending order
        i = 0
        rem[0] = total
        buf[0] = total
        while True:
            # fill positions after i greedily
            while i < parts - 1:
                rem[i + 1] = rem[i] - buf[i]
                i += 1
                buf[i] = rem[i]
            buf[parts - 1] = rem[parts - 1]
            out.append(tuple([buf[j] for j in range(parts)]))
            # step back to the last position that can be decreased
            i = parts - 2
            while i >= 0 and buf[i] == 0:
                i -= 1
            if i < 0:
                break
            buf[i] -= 1
        return out
    finally:
        free(buf)
        free(rem)
