"""Numpy implementations of the kernels in ``_ckernels.pyx``.

Semantics and output layout are identical; ``kernels`` picks one at import.
"""
import numpy as np

_CHUNK = 1 << 22


def subset_sums(roots):
    roots = np.ascontiguousarray(roots, dtype=np.int64)
    n, d = roots.shape
    sums = np.zeros((1, d), dtype=np.int64)
    degrees = np.zeros(1, dtype=np.int64)
    # doubling keeps index == bitmask: the upper half adds root i
    for i in range(n):
        sums = np.concatenate([sums, sums + roots[i]])
        degrees = np.concatenate([degrees, degrees + 1])
    return sums, degrees


def region_mask(points, shifts, offset):
    points = np.ascontiguousarray(points, dtype=np.int64)
    shifts = np.ascontiguousarray(shifts, dtype=np.int64)
    m_count, r = points.shape
    out = np.ones(m_count, dtype=np.uint8)
    if m_count == 0 or shifts.shape[0] == 0:
        return out
    step = max(1, _CHUNK // max(1, shifts.shape[0] * r))
    for start in range(0, m_count, step):
        block = points[start:start + step]
        total = block[:, None, :] + shifts[None, :, :] + offset
        out[start:start + step] = (total >= 0).all(axis=(1, 2))
    return out
