"""Very dominant weights X_++, the regions Omega(w) and the generic set Omega.

Two independent routes are kept on purpose:

* definitional tests (``is_very_dominant``, ``in_omega_w``) scan every weight
  of L_f(lambda) against every one of the 2^N exterior subset sums;
* closed forms (``very_dominant_bound``, ``omega_w_inequalities``) use that
  the minimum of a linear functional over subset sums is the sum of its
  negative parts, so for Q(n) each region is a box of per-coroot lower bounds.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .errors import UnsupportedTypeError
from .root_data import (Kind, RootDatum, Weight, WeylElement, add, dot_act, reduced_word,
                        weyl_elements)
from .super_comb import exterior_weights, f_module, subset_sum_table


@dataclass(frozen=True)
class RegionReport:
    kind: str
    bounds: dict[int, int] = field(default_factory=dict)
    witnesses: tuple[tuple[WeylElement, Weight], ...] = ()
    word: Optional[str] = None

    def contains(self, pairings: Sequence[int]) -> bool:
        return all(pairings[a - 1] >= c for a, c in self.bounds.items())

    def to_json(self) -> dict:
        kind = self.kind if self.word is None else f"{self.kind}({self.word})"
        return {
            "kind": kind,
            "bounds": [{"alpha": a, "min": c} for a, c in sorted(self.bounds.items())],
            "witnesses": [{"w": w.one_line(), "lambda": list(lam)} for w, lam in self.witnesses],
        }

    def inequalities(self) -> str:
        return ", ".join(f"α{a} ≥ {c}" for a, c in sorted(self.bounds.items()))


def _require_q(d: RootDatum, what: str):
    if d.kind is not Kind.Q:
        raise UnsupportedTypeError(
            f"{what} is only available in closed form for type Q; "
            f"use the definitional test for {d.super_type}")


def _pairing_matrix(d: RootDatum, vectors: np.ndarray) -> np.ndarray:
    idx = np.array(d.simple_indices, dtype=np.int64).reshape(-1, 2)
    if idx.size == 0:
        return np.zeros((vectors.shape[0], 0), dtype=np.int64)
    return np.ascontiguousarray(vectors[:, idx[:, 0]] - vectors[:, idx[:, 1]])


@lru_cache(maxsize=None)
def _sigma_pairings(d: RootDatum, w: WeylElement) -> np.ndarray:
    """Distinct rows of <w^{-1} sigma, a^v> over all exterior subset sums sigma."""
    sums, _ = subset_sum_table(d)
    winv = w.inverse()
    moved = np.empty_like(sums)
    moved[:, list(winv.perm)] = sums  # coordinate i goes to position winv.perm[i]
    pairs = np.unique(_pairing_matrix(d, moved), axis=0)
    pairs.setflags(write=False)
    return pairs


def _points_pairings(d: RootDatum, points) -> np.ndarray:
    arr = np.asarray(points, dtype=np.int64).reshape(-1, d.dim)
    return _pairing_matrix(d, arr)


# --- very dominant -------------------------------------------------------------

def is_very_dominant(d: RootDatum, weight: Sequence[int]) -> bool:
    """mu + sigma dominant for every weight mu of L_f(weight) and every exterior sigma."""
    lam = d.check_weight(weight)
    mus = list(f_module(d, lam).weights)
    mask = kernels.region_mask(_points_pairings(d, mus), _sigma_pairings(d, d.identity()), 0)
    return bool(mask.all())


def very_dominant_bound(d: RootDatum) -> dict[int, int]:
    """Exact per-coroot bounds: X_++ = {lambda : <lambda, a^v> >= c_a for all a}."""
    _require_q(d, "very_dominant_bound")
    return dict(_closed_form_costs(d, d.identity()))


def very_dominant_report(d: RootDatum) -> RegionReport:
    return RegionReport("VeryDominant", very_dominant_bound(d))


# --- Omega(w) --------------------------------------------------------------------

def in_omega_w(d: RootDatum, weight: Sequence[int], w: WeylElement) -> bool:
    """mu + w^{-1} sigma in C_Z-bar for all mu in wt L_f(weight) and all exterior sigma."""
    lam = d.check_weight(weight)
    mus = [tuple(x + r for x, r in zip(mu, d.rho)) for mu in f_module(d, lam).weights]
    mask = kernels.region_mask(_points_pairings(d, mus), _sigma_pairings(d, w), 0)
    return bool(mask.all())


def omega_mask(d: RootDatum, points, w: WeylElement) -> np.ndarray:
    """Vectorised ``in_omega_w`` for type Q over an array of weights (one per row)."""
    _require_q(d, "omega_mask")
    pts = np.asarray(points, dtype=np.int64).reshape(-1, d.dim) + np.asarray(d.rho)
    return kernels.region_mask(_points_pairings(d, pts), _sigma_pairings(d, w), 0).astype(bool)


@lru_cache(maxsize=None)
def _closed_form_costs(d: RootDatum, w: WeylElement) -> tuple[tuple[int, int], ...]:
    """c_a = sum over negative odd roots b of max(0, -<w^{-1} b, a^v>), before the rho shift."""
    winv = w.inverse()
    out = []
    for k, (i, j) in enumerate(d.simple_indices, start=1):
        cost = 0
        for beta in d.negative_odd:
            moved = winv.act(beta)
            cost += max(0, -(moved[i] - moved[j]))
        out.append((k, cost))
    return tuple(out)


def omega_w_bounds(d: RootDatum, w: WeylElement) -> dict[int, int]:
    _require_q(d, "omega_w_inequalities")
    rho_pairs = d.pairings(d.rho)
    return {k: cost - rho_pairs[k - 1] for k, cost in _closed_form_costs(d, w)}


def omega_w_inequalities(d: RootDatum, w: WeylElement) -> RegionReport:
    return RegionReport("OmegaW", omega_w_bounds(d, w), word=reduced_word(d, w))


def induced_gammas(d: RootDatum, lam: Weight, w: WeylElement) -> dict[Weight, int]:
    """w^{-1} . (nu + sigma) over nu in wt L_f(w . lam) and exterior sigma, with multiplicity."""
    winv = w.inverse()
    ext = exterior_weights(d).total()
    acc: Counter = Counter()
    for nu, m_nu in f_module(d, dot_act(d, w, lam)).weights.items():
        for sigma, m_sigma in ext.items():
            acc[dot_act(d, winv, add(nu, sigma))] += m_nu * m_sigma
    return dict(sorted(acc.items()))


def _in_omega_fast(d: RootDatum, lam: Weight, w: WeylElement) -> bool:
    if d.kind is Kind.Q:
        p = d.pairings(lam)
        return all(p[k - 1] >= c for k, c in omega_w_bounds(d, w).items())
    # for GL(n|n) L_f(w . lam) is not a twist of L_f(lam); the induced module must pass too
    return in_omega_w(d, lam, w) and all(d.in_closed_alcove(g)
                                         for g in induced_gammas(d, lam, w))


# --- generic weights ---------------------------------------------------------------

def is_generic(d: RootDatum, weight: Sequence[int]) -> Optional[list[tuple[WeylElement, Weight]]]:
    """All (w, lambda) with lambda in Omega(w) and w . lambda = weight, or None.

    Sorted by length of w, then one-line notation; callers use the first.
    """
    mu = d.check_weight(weight)
    found = []
    for w in weyl_elements(d):
        lam = dot_act(d, w.inverse(), mu)
        if _in_omega_fast(d, lam, w):
            found.append((w, lam))
    return found or None


def generic_report(d: RootDatum, weight: Sequence[int]) -> RegionReport:
    return RegionReport("GenericUnion", {}, tuple(is_generic(d, weight) or ()))


def all_omega_reports(d: RootDatum) -> list[RegionReport]:
    return [omega_w_inequalities(d, w) for w in weyl_elements(d)]
