# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: subset-sum enumeration and box membership scans."""
import numpy as np


def subset_sums(const long long[:, ::1] roots):
    """Sum of every subset of the rows of ``roots``, indexed by bitmask.

    Returns ``(sums, degrees)`` where ``sums[m]`` is the sum of the rows
    whose bits are set in ``m`` and ``degrees[m]`` is the popcount of ``m``.
    """
    cdef Py_ssize_t n = roots.shape[0]
    cdef Py_ssize_t d = roots.shape[1]
    cdef Py_ssize_t total = (<Py_ssize_t>1) << n
    sums_arr = np.zeros((total, d), dtype=np.int64)
    deg_arr = np.zeros(total, dtype=np.int64)
    cdef long long[:, ::1] sums = sums_arr
    cdef long long[::1] deg = deg_arr
    cdef Py_ssize_t mask, low, prev, b, k
    for mask in range(1, total):
        low = mask & (-mask)
        prev = mask ^ low
        b = 0
        while (low >> b) != 1:
            b += 1
        for k in range(d):
            sums[mask, k] = sums[prev, k] + roots[b, k]
        deg[mask] = deg[prev] + 1
    return sums_arr, deg_arr


def region_mask(const long long[:, ::1] points, const long long[:, ::1] shifts,
                long long offset):
    """``out[m]`` is 1 iff ``points[m, a] + shifts[s, a] + offset >= 0`` for all s, a."""
    cdef Py_ssize_t m_count = points.shape[0]
    cdef Py_ssize_t s_count = shifts.shape[0]
    cdef Py_ssize_t r = points.shape[1]
    out_arr = np.ones(m_count, dtype=np.uint8)
    cdef unsigned char[::1] out = out_arr
    cdef Py_ssize_t m, s, a
    cdef bint ok
    for m in range(m_count):
        ok = True
        for s in range(s_count):
            for a in range(r):
                if points[m, a] + shifts[s, a] + offset < 0:
                    ok = False
                    break
            if not ok:
                break
        out[m] = ok
    return out_arr
