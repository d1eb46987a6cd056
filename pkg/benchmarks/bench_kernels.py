"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import itertools
import timeit

import numpy as np

from superbbw import _pykernels, root_datum
from superbbw.regions import _pairing_matrix

try:
    from superbbw import _ckernels
except ImportError:
    _ckernels = None


def _roots(n):
    d = root_datum("q", n)
    return np.ascontiguousarray(np.array(d.negative_odd, dtype=np.int64)), d


def _mask_inputs(n, box):
    roots, d = _roots(n)
    sums, _ = _pykernels.subset_sums(roots)
    shifts = np.unique(_pairing_matrix(d, sums), axis=0)
    pts = np.array(list(itertools.product(range(-box, box + 1), repeat=n)), dtype=np.int64)
    return np.ascontiguousarray(_pairing_matrix(d, pts + np.array(d.rho))), np.ascontiguousarray(shifts)


def bench(label, impls, args, repeat):
    row = [label]
    ref = None
    for name, fn in impls:
        if fn is None:
            row.append(f"{name}: n/a")
            continue
        out = fn(*args)
        first = np.asarray(out[0] if isinstance(out, tuple) else out)
        if ref is None:
            ref = first
        assert (first == ref).all(), f"{name} disagrees"
        best = min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))
        row.append(f"{name}: {best * 1e3:8.2f} ms")
    print("  ".join(row))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    c_sums = _ckernels.subset_sums if _ckernels else None
    c_mask = _ckernels.region_mask if _ckernels else None
    print("subset sums over the negative odd roots of Q(n)")
    for n in (4, 5, 6):
        roots, _ = _roots(n)
        bench(f"  Q({n}) N={len(roots):2d}", [("cython", c_sums), ("numpy", _pykernels.subset_sums)],
              (roots,), args.repeat)
    print("region mask: every box point against every moved subset sum")
    for n, box in ((3, 12), (4, 6), (5, 4)):
        pts, shifts = _mask_inputs(n, box)
        bench(f"  Q({n}) {len(pts):6d} pts x {len(shifts):4d} shifts",
              [("cython", c_mask), ("numpy", _pykernels.region_mask)], (pts, shifts, 0), args.repeat)
    print("region mask, all points inside (no early exit)")
    for n, box in ((3, 12), (4, 6), (5, 4)):
        pts, shifts = _mask_inputs(n, box)
        bench(f"  Q({n}) {len(pts):6d} pts x {len(shifts):4d} shifts",
              [("cython", c_mask), ("numpy", _pykernels.region_mask)], (pts, shifts, 40), args.repeat)


if __name__ == "__main__":
    main()
