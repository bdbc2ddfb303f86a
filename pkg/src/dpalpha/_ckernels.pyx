# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels; see ``_pykernels`` for the contracts."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t, uint8_t, int32_t

cnp.import_array()


cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


def closure(const int32_t[:, ::1] mult, uint8_t[::1] mask, gens):
    cdef int32_t[::1] g = np.ascontiguousarray(gens, dtype=np.int32)
    cdef Py_ssize_t m = mask.shape[0], ng = g.shape[0]
    cdef int32_t[::1] stack = np.empty(m, dtype=np.int32)
    cdef Py_ssize_t top = 0, i, k, size = 0
    cdef int32_t x, y
    for i in range(m):
        if mask[i]:
            stack[top] = <int32_t>i
            top += 1
            size += 1
    with nogil:
        while top > 0:
            top -= 1
            x = stack[top]
            for k in range(ng):
                y = mult[x, g[k]]
                if not mask[y]:
                    mask[y] = 1
                    stack[top] = y
                    top += 1
                    size += 1
    return size


def adjacent_pairs(const uint64_t[:, ::1] zero_sets, plus, minus, int min_common):
    cdef int64_t[::1] P = np.ascontiguousarray(plus, dtype=np.int64)
    cdef int64_t[::1] N = np.ascontiguousarray(minus, dtype=np.int64)
    cdef Py_ssize_t m = zero_sets.shape[0], w = zero_sets.shape[1]
    cdef Py_ssize_t a, b, r, k, cnt = 0
    cdef int64_t p, n
    cdef int pc
    cdef bint ok, sup
    cdef uint64_t[::1] common = np.empty(w, dtype=np.uint64)
    out = []
    for a in range(P.shape[0]):
        p = P[a]
        for b in range(N.shape[0]):
            n = N[b]
            pc = 0
            for k in range(w):
                common[k] = zero_sets[p, k] & zero_sets[n, k]
                pc += _popcount(common[k])
            if pc < min_common:
                continue
            ok = True
            for r in range(m):
                if r == p or r == n:
                    continue
                sup = True
                for k in range(w):
                    if (zero_sets[r, k] & common[k]) != common[k]:
                        sup = False
                        break
                if sup:
                    ok = False
                    break
            if ok:
                out.append((p, n))
    return np.array(out, dtype=np.int64).reshape(-1, 2)
