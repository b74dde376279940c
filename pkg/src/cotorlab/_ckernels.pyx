# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels; signature-compatible with _kernels_py.

F_p routines run on int64 buffers (p is prime and < 2^31, so products fit);
Q routines keep Python ints/Fractions but compile the loop structure.
"""

from cpython.list cimport PyList_GET_ITEM
from fractions import Fraction
from math import gcd

from cython cimport view


cdef long long _inv_mod(long long a, long long p):
    # extended Euclid; a != 0 mod p, p prime
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r / newr
        tmp = t - q * newt; t = newt; newt = tmp
        tmp = r - q * newr; r = newr; newr = tmp
    if t < 0:
        t += p
    return t


cdef long long[::1] _fill(object flat, Py_ssize_t size):
    cdef long long[::1] buf = view.array(shape=(size if size else 1,),
                                         itemsize=sizeof(long long), format="q")
    cdef Py_ssize_t i
    for i in range(size):
        buf[i] = flat[i]
    return buf


def fp_rank(flat, Py_ssize_t m, Py_ssize_t n, long long p):
    if m == 0 or n == 0:
        return 0
    cdef long long[::1] a = _fill(flat, m * n)
    cdef Py_ssize_t rank = 0, col, r, j, piv
    cdef long long inv, f, v
    for col in range(n):
        piv = -1
        for r in range(rank, m):
            if a[r * n + col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, n):
                v = a[rank * n + j]; a[rank * n + j] = a[piv * n + j]; a[piv * n + j] = v
        inv = _inv_mod(a[rank * n + col], p)
        for r in range(rank + 1, m):
            if a[r * n + col] == 0:
                continue
            f = (a[r * n + col] * inv) % p
            for j in range(col, n):
                if a[rank * n + j] != 0:
                    v = (a[r * n + j] - f * a[rank * n + j]) % p
                    if v < 0:
                        v += p
                    a[r * n + j] = v
        rank += 1
        if rank == m:
            break
    return rank


def fp_rref(flat, Py_ssize_t m, Py_ssize_t n, long long p):
    cdef long long[::1] a = _fill(flat, m * n)
    pivots = []
    cdef Py_ssize_t rank = 0, col, r, j, piv
    cdef long long inv, f, v
    for col in range(n):
        piv = -1
        for r in range(rank, m):
            if a[r * n + col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, n):
                v = a[rank * n + j]; a[rank * n + j] = a[piv * n + j]; a[piv * n + j] = v
        inv = _inv_mod(a[rank * n + col], p)
        for j in range(col, n):
            a[rank * n + j] = (a[rank * n + j] * inv) % p
        for r in range(m):
            if r == rank:
                continue
            f = a[r * n + col]
            if f == 0:
                continue
            for j in range(col, n):
                if a[rank * n + j] != 0:
                    v = (a[r * n + j] - f * a[rank * n + j]) % p
                    if v < 0:
                        v += p
                    a[r * n + j] = v
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    out = [0] * (m * n)
    for r in range(m * n):
        out[r] = a[r]
    return out, pivots


def fp_matmul(a_flat, Py_ssize_t m, Py_ssize_t k, b_flat, Py_ssize_t n, long long p):
    cdef long long[::1] a = _fill(a_flat, m * k)
    cdef long long[::1] b = _fill(b_flat, k * n)
    cdef long long[::1] c = view.array(shape=(m * n if m * n else 1,),
                                       itemsize=sizeof(long long), format="q")
    cdef Py_ssize_t i, t, j
    cdef long long av, v
    for i in range(m * n):
        c[i] = 0
    for i in range(m):
        for t in range(k):
            av = a[i * k + t]
            if av == 0:
                continue
            for j in range(n):
                if b[t * n + j] != 0:
                    v = (c[i * n + j] + av * b[t * n + j]) % p
                    c[i * n + j] = v
    out = [0] * (m * n)
    for i in range(m * n):
        out[i] = c[i]
    return out


def _integerize(list row):
    cdef Py_ssize_t j, n = len(row)
    lcm = 1
    for j in range(n):
        v = <object>PyList_GET_ITEM(row, j)
        if isinstance(v, Fraction):
            d = v.denominator
            lcm = lcm // gcd(lcm, d) * d
    ints = [0] * n
    for j in range(n):
        v = <object>PyList_GET_ITEM(row, j)
        ints[j] = int(v * lcm) if isinstance(v, Fraction) else v * lcm
    g = 0
    for j in range(n):
        g = gcd(g, <object>PyList_GET_ITEM(ints, j))
        if g == 1:
            return ints
    if g > 1:
        for j in range(n):
            ints[j] = (<object>PyList_GET_ITEM(ints, j)) // g
    return ints


def q_rank(flat, Py_ssize_t m, Py_ssize_t n):
    if m == 0 or n == 0:
        return 0
    cdef list rows = []
    cdef Py_ssize_t i, col, j, idx, piv, nnz, best_nnz
    for i in range(m):
        r = _integerize(list(flat[i * n:(i + 1) * n]))
        for j in range(n):
            if r[j] != 0:
                rows.append(r)
                break
    cdef Py_ssize_t rank = 0, nrows = len(rows)
    cdef list row, prow
    for col in range(n):
        piv = -1
        best_nnz = n + 1
        for idx in range(rank, nrows):
            row = <list>PyList_GET_ITEM(rows, idx)
            if (<object>PyList_GET_ITEM(row, col)) != 0:
                nnz = 0
                for j in range(n):
                    if (<object>PyList_GET_ITEM(row, j)) != 0:
                        nnz += 1
                if nnz < best_nnz:
                    best_nnz = nnz
                    piv = idx
        if piv < 0:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = <list>PyList_GET_ITEM(rows, rank)
        pv = prow[col]
        for idx in range(rank + 1, nrows):
            row = <list>PyList_GET_ITEM(rows, idx)
            rv = row[col]
            if rv == 0:
                continue
            g = 0
            for j in range(col, n):
                val = pv * row[j] - rv * prow[j]
                row[j] = val
                g = gcd(g, val)
            if g > 1:
                for j in range(col, n):
                    row[j] = row[j] // g
        rank += 1
        if rank == nrows:
            break
    return rank


def q_rref(flat, Py_ssize_t m, Py_ssize_t n):
    cdef list rows = []
    cdef Py_ssize_t i, col, r, j, piv, rank = 0
    for i in range(m):
        rows.append([v if isinstance(v, Fraction) else Fraction(v)
                     for v in flat[i * n:(i + 1) * n]])
    pivots = []
    cdef list row, prow
    for col in range(n):
        piv = -1
        for r in range(rank, m):
            row = <list>PyList_GET_ITEM(rows, r)
            if (<object>PyList_GET_ITEM(row, col)) != 0:
                piv = r
                break
        if piv < 0:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = <list>PyList_GET_ITEM(rows, rank)
        pv = prow[col]
        for j in range(col, n):
            prow[j] = prow[j] / pv
        for r in range(m):
            if r == rank:
                continue
            row = <list>PyList_GET_ITEM(rows, r)
            f = row[col]
            if f == 0:
                continue
            for j in range(col, n):
                if prow[j] != 0:
                    row[j] = row[j] - f * prow[j]
        pivots.append(col)
        rank += 1
        if rank == m:
            break
    out = []
    for r in range(m):
        out.extend(rows[r])
    return out, pivots


def q_matmul(a, Py_ssize_t m, Py_ssize_t k, b, Py_ssize_t n):
    cdef list out = [0] * (m * n)
    cdef list al = list(a), bl = list(b)
    cdef Py_ssize_t i, t, j, base, brow
    for i in range(m):
        base = i * n
        for t in range(k):
            av = <object>PyList_GET_ITEM(al, i * k + t)
            if av == 0:
                continue
            brow = t * n
            for j in range(n):
                bv = <object>PyList_GET_ITEM(bl, brow + j)
                if bv != 0:
                    out[base + j] = out[base + j] + av * bv
    return out
