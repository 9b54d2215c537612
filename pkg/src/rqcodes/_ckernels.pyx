# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels. Vectors are rows of uint64 words."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def min_weight_span(const uint64_t[:, ::1] rows):
    """Minimum popcount over the nonzero F2 span of independent rows.

    The span of the first ``low`` rows is tabulated once; the remaining rows
    are walked in Gray-code order and XORed against the whole table.
    """
    cdef Py_ssize_t m = rows.shape[0], W = rows.shape[1]
    cdef Py_ssize_t low, size, t, k, j, start
    cdef uint64_t hi, nhi
    cdef long best = 1 << 30, w
    if m == 0:
        return -1
    if m > 62:
        raise ValueError("too many rows for exhaustive enumeration")
    low = m if m < 16 else 16
    size = (<Py_ssize_t> 1) << low
    table_arr = np.zeros((size, W), dtype=np.uint64)
    cur_arr = np.zeros(W, dtype=np.uint64)
    cdef uint64_t[:, ::1] table = table_arr
    cdef uint64_t[::1] cur = cur_arr
    cdef uint64_t c0
    with nogil:
        for j in range(low):
            for t in range((<Py_ssize_t> 1) << j):
                for k in range(W):
                    table[t + ((<Py_ssize_t> 1) << j), k] = table[t, k] ^ rows[j, k]
        nhi = (<uint64_t> 1) << (m - low)
        hi = 0
        while hi < nhi:
            if hi:
                j = low + __builtin_ctzll(hi)
                for k in range(W):
                    cur[k] ^= rows[j, k]
            start = 0 if hi else 1
            if W == 1:
                c0 = cur[0]
                for t in range(start, size):
                    w = __builtin_popcountll(table[t, 0] ^ c0)
                    if w < best:
                        best = w
            else:
                for t in range(start, size):
                    w = 0
                    for k in range(W):
                        w += __builtin_popcountll(table[t, k] ^ cur[k])
                    if w < best:
                        best = w
            if best <= 1:
                break
            hi += 1
    return best


def min_weight_combos(const uint64_t[:, ::1] rows, int t):
    """Minimum popcount over XORs of 1..t distinct rows."""
    cdef Py_ssize_t m = rows.shape[0], W = rows.shape[1]
    cdef Py_ssize_t k, level, r
    cdef long best = 1 << 30, w
    if m == 0:
        return -1
    if t > m:
        t = m
    cdef Py_ssize_t *idx = <Py_ssize_t *> malloc((t + 1) * sizeof(Py_ssize_t))
    cdef uint64_t *acc = <uint64_t *> malloc((t + 1) * W * sizeof(uint64_t))
    if idx == NULL or acc == NULL:
        free(idx)
        free(acc)
        raise MemoryError()
    try:
        with nogil:
            for k in range(W):
                acc[k] = 0
            # depth-first walk over increasing index tuples; acc[level] holds the prefix XOR
            level = 1
            idx[1] = 0
            while level > 0:
                r = idx[level]
                if r >= m:
                    level -= 1
                    if level > 0:
                        idx[level] += 1
                    continue
                w = 0
                for k in range(W):
                    acc[level * W + k] = acc[(level - 1) * W + k] ^ rows[r, k]
                    w += __builtin_popcountll(acc[level * W + k])
                if w < best:
                    best = w
                if level < t:
                    level += 1
                    idx[level] = r + 1
                else:
                    idx[level] += 1
    finally:
        free(idx)
        free(acc)
    return best


def zero_syndrome_scan(const uint64_t[::1] columns):
    """All x in [0, 2^len(columns)) whose syndrome XOR_{bit j of x} columns[j] is 0.

    Returned sorted ascending.
    """
    cdef Py_ssize_t nb = columns.shape[0]
    if nb > 26:
        raise ValueError("scan space too large")
    cdef uint64_t total = (<uint64_t> 1) << nb
    cdef uint64_t i, x = 0, syn = 0, count = 1
    cdef int j
    out = np.empty(total, dtype=np.uint64)
    cdef uint64_t[::1] ov = out
    ov[0] = 0
    with nogil:
        i = 1
        while i < total:
            j = __builtin_ctzll(i)
            x ^= (<uint64_t> 1) << j
            syn ^= columns[j]
            if syn == 0:
                ov[count] = x
                count += 1
            i += 1
    res = out[:count].copy()
    res.sort()
    return res
