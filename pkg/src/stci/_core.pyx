# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_fallback``; same signatures, same outputs."""
import numpy as np
from libc.stdint cimport int64_t

cdef int64_t INF = (<int64_t>1) << 62


def min_coin_tables(coins, Py_ssize_t limit):
    cdef Py_ssize_t n = len(coins)
    cdef Py_ssize_t size = limit + 1
    cdef Py_ssize_t i, v
    cdef int64_t g, best, cand
    out = np.empty((n, size), dtype=np.int64)
    cdef int64_t[:, ::1] t = out
    for i in range(n):
        g = coins[i]
        for v in range(size):
            best = t[i - 1, v] if i > 0 else (0 if v == 0 else INF)
            if v >= g and t[i, v - g] < INF:
                cand = t[i, v - g] + 1
                if cand < best:
                    best = cand
            t[i, v] = best
    return out


def common_zeros(int q, int nvars, coeffs, exps, offsets):
    cdef int64_t[::1] c = np.ascontiguousarray(coeffs, dtype=np.int64)
    cdef int64_t[:, ::1] e = np.ascontiguousarray(
        np.asarray(exps, dtype=np.int64).reshape(-1, nvars))
    cdef int64_t[::1] off = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef int npoly = off.shape[0] - 1
    cdef int64_t max_e = 0
    cdef Py_ssize_t t, j, k, lead, width, idx, total, rest
    for t in range(e.shape[0]):
        for j in range(nvars):
            if e[t, j] > max_e:
                max_e = e[t, j]
    pow_arr = np.ones((q, max_e + 1), dtype=np.int64)
    cdef int64_t[:, ::1] pw = pow_arr
    cdef int64_t a, val, term
    for a in range(q):
        for k in range(1, max_e + 1):
            pw[a, k] = pw[a, k - 1] * a % q
    pt_arr = np.zeros(nvars, dtype=np.int64)
    cdef int64_t[::1] pt = pt_arr
    found = []
    cdef bint ok
    for lead in range(nvars):
        width = nvars - 1 - lead
        total = q ** width
        for j in range(nvars):
            pt[j] = 0
        pt[lead] = 1
        for idx in range(total):
            rest = idx
            for j in range(nvars - 1, lead, -1):
                pt[j] = rest % q
                rest = rest // q
            ok = True
            for k in range(npoly):
                val = 0
                for t in range(off[k], off[k + 1]):
                    term = c[t]
                    for j in range(nvars):
                        if e[t, j]:
                            term = term * pw[pt[j], e[t, j]] % q
                    val = (val + term) % q
                if val != 0:
                    ok = False
                    break
            if ok:
                found.append(tuple(pt_arr))
    if not found:
        return np.zeros((0, nvars), dtype=np.int64)
    return np.array(found, dtype=np.int64)
