"""Odd-root combinatorics.

* weights of the exterior algebra on (g1/b1)^*, as subset sums of the
  negative odd roots, graded by subset size;
* weight data of the simple detecting-subalgebra modules L_f(lambda);
* the Poincare polynomial p_{G,B}(t) of R ind_B^G C.

L_f(lambda) for Q(n) restricts to the torus as copies of lambda.  Its
dimension is that of the simple supermodule over the Clifford algebra on
l(lambda) = #{i : lambda_i != 0} generators, namely 2^ceil(l/2); the test
suite rebuilds those modules explicitly to pin the exponent.

For GL(n|n) each diagonal gl(1|1) factor with weight (a, b) contributes a
one-dimensional module if a + b = 0 and otherwise the two weights (a, b)
and (a - 1, b + 1), the second obtained by the lowering odd element e_21
(weight d - e) of the lower triangular Borel.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import kernels
from .char_ring import LaurentPoly
from .errors import UnsupportedTypeError
from .root_data import Kind, RootDatum, Weight

MAX_ODD_ROOTS = 20


@dataclass(frozen=True)
class ExteriorWeights:
    negative_odd: tuple[Weight, ...]
    by_degree: tuple[dict[Weight, int], ...]

    @property
    def top_degree(self) -> int:
        return len(self.negative_odd)

    def total(self) -> dict[Weight, int]:
        acc: Counter = Counter()
        for layer in self.by_degree:
            acc.update(layer)
        return dict(sorted(acc.items()))

    def support(self) -> frozenset[Weight]:
        return frozenset(w for layer in self.by_degree for w in layer)


@dataclass(frozen=True)
class FModuleModel:
    highest: Weight
    weights: dict[Weight, int]
    dim: int


@lru_cache(maxsize=None)
def subset_sum_table(d: RootDatum) -> tuple[np.ndarray, np.ndarray]:
    """All 2^N subset sums of the negative odd roots (row m <-> bitmask m) and their sizes."""
    roots = d.negative_odd
    if len(roots) > MAX_ODD_ROOTS:
        raise UnsupportedTypeError(
            f"{d.super_type} has {len(roots)} odd roots; exterior enumeration is capped at "
            f"{MAX_ODD_ROOTS}")
    arr = np.array(roots, dtype=np.int64).reshape(len(roots), d.dim)
    sums, degrees = kernels.subset_sums(arr)
    sums.setflags(write=False)
    degrees.setflags(write=False)
    return sums, degrees


@lru_cache(maxsize=None)
def exterior_weights(d: RootDatum) -> ExteriorWeights:
    sums, degrees = subset_sum_table(d)
    n_roots = len(d.negative_odd)
    layers: list[Counter] = [Counter() for _ in range(n_roots + 1)]
    uniq, inverse, counts = np.unique(
        np.column_stack([degrees, sums]), axis=0, return_inverse=True, return_counts=True)
    for row, c in zip(uniq.tolist(), counts.tolist()):
        layers[row[0]][tuple(row[1:])] += c
    return ExteriorWeights(d.negative_odd, tuple(dict(sorted(layer.items())) for layer in layers))


@lru_cache(maxsize=None)
def exterior_support(d: RootDatum) -> frozenset[Weight]:
    return exterior_weights(d).support()


def clifford_dim(support_size: int) -> int:
    return 2 ** ((support_size + 1) // 2)


def f_module(d: RootDatum, weight: Sequence[int]) -> FModuleModel:
    lam = d.check_weight(weight)
    if d.kind is Kind.Q:
        ell = sum(1 for x in lam if x != 0)
        k = clifford_dim(ell)
        return FModuleModel(lam, {lam: k}, k)
    n = d.rank
    weights: dict[Weight, int] = {lam: 1}
    for i in range(n):
        a, b = lam[i], lam[n + i]
        if a + b == 0:
            continue
        shift = [0] * d.dim
        shift[i], shift[n + i] = -1, 1
        grown: dict[Weight, int] = {}
        for wt, m in weights.items():
            for cand in (wt, tuple(x + s for x, s in zip(wt, shift))):
                grown[cand] = grown.get(cand, 0) + m
        weights = grown
    weights = dict(sorted(weights.items()))
    return FModuleModel(lam, weights, sum(weights.values()))


def _gaussian_factorial(n: int) -> LaurentPoly:
    # [n]_s! = prod_{k=1}^{n} (1 + s + ... + s^{k-1})
    out = LaurentPoly({0: 1})
    for k in range(1, n + 1):
        out = out * LaurentPoly({e: 1 for e in range(k)})
    return out


def odd_reflection_group_rank(d: RootDatum) -> int:
    """W_1 is the symmetric group on this many letters for Q(n) and GL(n|n)."""
    if d.kind not in (Kind.Q, Kind.GLNN):
        raise UnsupportedTypeError(f"no odd reflection group recorded for {d.super_type}")
    return d.rank


def poincare_polynomial(d: RootDatum) -> LaurentPoly:
    """p_{G,B}(t) = p_{S_n}(s) with s = t for Q(n) and s = t^2 for GL(n|n)."""
    base = _gaussian_factorial(odd_reflection_group_rank(d))
    return base if d.kind is Kind.Q else base.substitute_power(2)


def is_distinct_negative_sum(d: RootDatum, sigma: Sequence[int]) -> bool:
    return tuple(sigma) in exterior_support(d)
