"""G_0-characters of H^n(lambda) = R^n ind_B^G L_f(lambda), where they are determined.

Known cases:

* very dominant lambda: everything sits in degree 0;
* generic mu = w . lambda with lambda in Omega(w): everything sits in degree
  l(w), with character sum_gamma m_gamma * ch ind_{B_0}^{G_0} gamma;
* lambda = 0: H^n(0) is trivial with multiplicity the t^n coefficient of
  p_{G,B};
* otherwise only the Euler character sum_n (-1)^n ch H^n(lambda) is offered.

The Gamma multiset for a witness (w, lambda) is computed from the module that
is actually induced, L_f(w . lambda): each weight nu + sigma of
L_f(w . lambda) (x) Lambda(g1/b1)^* is pulled back to w^{-1} . (nu + sigma).
For Q(n) this is lambda + w^{-1} sigma.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .char_ring import Character, character_sum, dual, euler_chi, scale, weyl_character
from .errors import (ConsistencyError, DomainError, NonDominantError, NotGenericError,
                     NotVeryDominantError, UnsupportedTypeError)
from .regions import induced_gammas, is_generic, is_very_dominant
from .root_data import Kind, RootDatum, Weight, WeylElement, add, reduced_word
from .super_comb import exterior_weights, f_module, poincare_polynomial

KEMPF = "Kempf"
GENERIC = "GenericBBW"
EULER_ONLY = "EulerOnly"
TRIVIAL = "TrivialModule"


@dataclass(frozen=True)
class CohomologyProfile:
    weight: Weight
    degrees: dict[int, Character]
    provenance: str
    witness: Optional[tuple[WeylElement, Weight]] = None
    euler: Optional[Character] = None
    convention_dependent: bool = False

    def character(self, n: int) -> Character:
        if self.provenance == EULER_ONLY:
            raise DomainError(f"H^{n}({list(self.weight)}) is not determined; only the Euler "
                              "character is known")
        return self.degrees.get(n, Character.zero())

    @property
    def nonzero_degrees(self) -> list[int]:
        return sorted(n for n, ch in self.degrees.items() if ch)

    def to_json(self) -> dict:
        out = {
            "lambda": list(self.weight),
            "provenance": self.provenance,
            "degrees": [{"n": n, "char": ch.to_json()} for n, ch in sorted(self.degrees.items())],
        }
        if self.euler is not None:
            out["euler"] = self.euler.to_json()
        if self.convention_dependent:
            out["convention_dependent"] = True
        return out


# --- building blocks ---------------------------------------------------------

def gamma_multiset(d: RootDatum, weight: Sequence[int], w: WeylElement) -> dict[Weight, int]:
    """Weights gamma with multiplicities m_{gamma,w} for the witness (w, weight)."""
    return induced_gammas(d, d.check_weight(weight), w)


def _induced_sum(d: RootDatum, gammas: dict[Weight, int]) -> Character:
    return character_sum(scale(m, euler_chi(d, g)) for g, m in gammas.items())


def euler_character(d: RootDatum, weight: Sequence[int]) -> Character:
    """sum_n (-1)^n ch H^n(weight) from even Euler characteristics of L_f(weight) (x) Lambda."""
    lam = d.check_weight(weight)
    ext = exterior_weights(d).total()
    acc: Counter = Counter()
    for nu, m_nu in f_module(d, lam).weights.items():
        for sigma, m_sigma in ext.items():
            acc[add(nu, sigma)] += m_nu * m_sigma
    return _induced_sum(d, acc)


# --- determined ranges -------------------------------------------------------

def kempf_character(d: RootDatum, weight: Sequence[int]) -> CohomologyProfile:
    lam = d.check_weight(weight)
    if not is_very_dominant(d, lam):
        raise NotVeryDominantError(
            f"{list(lam)} is not very dominant; use generic_cohomology for generic weights")
    gammas = gamma_multiset(d, lam, d.identity())
    for g in gammas:
        if not d.is_dominant(g):  # pragma: no cover - guaranteed by very dominance
            raise ConsistencyError(f"gamma {list(g)} not dominant for very dominant {list(lam)}")
    ch = character_sum(scale(m, weyl_character(d, g)) for g, m in gammas.items())
    return CohomologyProfile(lam, {0: ch}, KEMPF, (d.identity(), lam),
                             convention_dependent=d.kind is not Kind.Q)


def _generic_from_witness(d: RootDatum, mu: Weight, w: WeylElement, lam: Weight) -> Character:
    gammas = gamma_multiset(d, lam, w)
    bad = [g for g in gammas if not d.in_closed_alcove(g)]
    if bad:
        raise NotGenericError(
            f"witness ({reduced_word(d, w)}, {list(lam)}) leaves gamma {list(bad[0])} outside the "
            f"closed alcove for {d.super_type}")
    return _induced_sum(d, gammas)


def generic_cohomology(d: RootDatum, weight: Sequence[int]) -> CohomologyProfile:
    mu = d.check_weight(weight)
    witnesses = is_generic(d, mu)
    if not witnesses:
        raise NotGenericError(f"{list(mu)} is not generic; only euler_character is available")
    w, lam = witnesses[0]
    ch = _generic_from_witness(d, mu, w, lam)
    provenance = KEMPF if w.is_identity and is_very_dominant(d, mu) else GENERIC
    return CohomologyProfile(mu, {w.length: ch}, provenance, (w, lam),
                             convention_dependent=d.kind is not Kind.Q)


def generic_characters_all_witnesses(d: RootDatum, weight: Sequence[int]):
    """(w, lambda, degree, character) for every witness; used for agreement checks."""
    mu = d.check_weight(weight)
    return [(w, lam, w.length, _generic_from_witness(d, mu, w, lam))
            for w, lam in (is_generic(d, mu) or [])]


def trivial_profile(d: RootDatum) -> CohomologyProfile:
    p = poincare_polynomial(d)
    zero = (0,) * d.dim
    degrees = {e: Character.monomial(zero, c) for e, c in p.coeffs.items()}
    return CohomologyProfile(zero, degrees, TRIVIAL)


def cohomology(d: RootDatum, weight: Sequence[int]) -> CohomologyProfile:
    """Best available description of H^*(weight): exact where known, else Euler only."""
    lam = d.check_weight(weight)
    if not any(lam):
        return trivial_profile(d)
    try:
        return generic_cohomology(d, lam)
    except NotGenericError:
        return CohomologyProfile(lam, {}, EULER_ONLY, euler=euler_character(d, lam),
                                 convention_dependent=d.kind is not Kind.Q)


def h0_character(d: RootDatum, weight: Sequence[int]) -> Character:
    return cohomology(d, weight).character(0)


# --- Q(2) ----------------------------------------------------------------------

def _require_q2(d: RootDatum):
    if d.kind is not Kind.Q or d.rank != 2:
        raise UnsupportedTypeError(f"this analysis is specific to Q(2), not {d.super_type}")


def _alpha(d: RootDatum) -> Weight:
    return d.even_simple[0]


def is_rho_multiple(sigma: Sequence[int]) -> bool:
    """Nonzero weights on the line through (1, -1)."""
    return sigma[0] + sigma[1] == 0 and sigma[0] != 0


def q2_simple_character(d: RootDatum, sigma: Sequence[int]) -> Character:
    """ch L(sigma) for the simple Q(2)-module of dominant highest weight sigma."""
    _require_q2(d)
    s = d.check_weight(sigma)
    if not d.is_dominant(s):
        raise NonDominantError(f"{list(s)} is not dominant")
    if s == (0, 0):
        return Character.monomial(s)
    if s[0] == s[1]:
        raise DomainError(f"no finite-dimensional simple Q(2)-module has highest weight {list(s)}")
    base = scale(2, weyl_character(d, s))
    if is_rho_multiple(s) or s[0] - s[1] == 1:
        return base
    lower = tuple(x - a for x, a in zip(s, _alpha(d)))
    return base + scale(2, weyl_character(d, lower))


@dataclass(frozen=True)
class Q2Analysis:
    sigma: Weight
    h0: Character
    factors: tuple[Weight, ...]
    socle: Weight
    flags: tuple[str, ...] = field(default=())

    @property
    def length(self) -> int:
        return len(self.factors)

    @property
    def head(self) -> Optional[Weight]:
        """Highest weight of the head when the length forces it (length 1 or 2)."""
        if self.length == 1:
            return self.factors[0]
        if self.length == 2:
            return self.factors[1]
        return None

    def to_json(self) -> dict:
        return {
            "sigma": list(self.sigma),
            "h0": self.h0.to_json(),
            "factors": [list(f) for f in self.factors],
            "socle": list(self.socle),
            "flags": list(self.flags),
        }


def peel_composition_factors(d: RootDatum, ch: Character) -> list[Weight]:
    """Greedy highest-weight peeling of ``ch`` by simple Q(2) characters."""
    _require_q2(d)
    remaining = ch
    factors: list[Weight] = []
    while remaining:
        top = max(remaining.weights(), key=lambda wt: (wt[0] - wt[1], wt))
        mult = remaining[top]
        if mult < 0 or not d.is_dominant(top):
            raise ConsistencyError(
                f"peeling stuck at weight {list(top)} with multiplicity {mult}")
        try:
            simple = q2_simple_character(d, top)
        except DomainError as exc:
            raise ConsistencyError(f"peeling reached {list(top)}: {exc}") from exc
        k, rem = divmod(mult, simple[top])
        if rem or k <= 0:
            raise ConsistencyError(
                f"multiplicity {mult} at {list(top)} is not a multiple of {simple[top]}")
        remaining = remaining - scale(k, simple)
        if not all(m > 0 for _, m in remaining.items()):
            raise ConsistencyError(f"negative remainder after removing {k} x L({list(top)})")
        factors.extend([top] * k)
    return factors


def q2_h0_analysis(d: RootDatum, sigma: Sequence[int]) -> Q2Analysis:
    _require_q2(d)
    s = d.check_weight(sigma)
    if not d.is_dominant(s) or s == (0, 0):
        raise NonDominantError(f"need a nonzero dominant weight, got {list(s)}")
    h0 = generic_cohomology(d, s).character(0)
    factors = peel_composition_factors(d, h0)
    if factors[0] != s:
        raise ConsistencyError(f"top factor {list(factors[0])} differs from {list(s)}")
    flags = []
    gap = s[0] - s[1]
    if abs(gap) <= 2:
        flags.append(f"edge case: sigma1 - sigma2 = {gap}")
    if gap == 1:
        flags.append("sigma1 - sigma2 = 1: L(sigma - alpha) would have non-dominant highest "
                     f"weight; peeling gives length {len(factors)}")
    if len(factors) > 2:
        flags.append(f"length {len(factors)}: head not determined by characters")
    return Q2Analysis(s, h0, tuple(factors), s, tuple(flags))


def q2_h1_character(d: RootDatum, sigma: Sequence[int]) -> Character:
    """ch H^1(sigma) = dual of ch H^0(-sigma) (Serre duality for Q(2))."""
    _require_q2(d)
    s = d.check_weight(sigma)
    return dual(h0_character(d, tuple(-x for x in s)))


# --- socles of H^1 -----------------------------------------------------------------

SIMPLE = "SimpleSocle"
UNDETERMINED = "NotDetermined"
ZERO = "Zero"


@dataclass(frozen=True)
class SocleReport:
    weight: Weight
    statement: str
    highest_weight: Optional[Weight] = None
    justification: str = ""
    note: str = ""

    def to_json(self) -> dict:
        return {
            "lambda": list(self.weight),
            "statement": self.statement,
            "highest_weight": None if self.highest_weight is None else list(self.highest_weight),
            "justification": self.justification,
            "note": self.note,
        }


def _q2_h1_socle(d: RootDatum, lam: Weight) -> tuple[Optional[Weight], str]:
    analysis = q2_h0_analysis(d, tuple(-x for x in lam))
    head = analysis.head
    if head is None:
        return None, f"H^0({list(analysis.sigma)}) has length {analysis.length}; head unknown"
    # socle of a dual is the dual of the head; L(t)^* = L(-w0 t)
    return (-head[1], -head[0]), f"dual of the head L({list(head)}) of H^0({list(analysis.sigma)})"


def h1_socle_report(d: RootDatum, weight: Sequence[int]) -> SocleReport:
    if d.kind is not Kind.Q:
        raise UnsupportedTypeError(f"socle analysis is implemented for type Q only, not {d.super_type}")
    lam = d.check_weight(weight)
    if not any(lam):
        k = poincare_polynomial(d).coefficient(1)
        if k == 0:
            return SocleReport(lam, ZERO, justification="R^1 ind C = 0 (Poincare polynomial)")
        if k == 1:
            return SocleReport(lam, SIMPLE, lam, "R^1 ind C is one trivial module",
                               note="H^1(0) ≅ C")
        return SocleReport(lam, UNDETERMINED, justification="R^1 ind C is a sum of trivial modules",
                           note=f"H^1(0) ≅ C^{{⊕{k}}}, k = {k} = t-coefficient of p_G,B")
    witnesses = is_generic(d, lam)
    if witnesses and witnesses[0][0].length != 1:
        w = witnesses[0][0]
        return SocleReport(lam, ZERO, justification=f"generic weight, cohomology concentrated in "
                                                    f"degree l({reduced_word(d, w)}) = {w.length}")
    negative = [k for k, p in enumerate(d.pairings(lam), start=1) if p < 0]
    if negative:
        why = f"<lambda, alpha{negative[0]}^v> < 0 (minimal parabolic of type Q(2))"
        if d.rank == 2:
            hw, note = _q2_h1_socle(d, lam)
            return SocleReport(lam, SIMPLE, hw, why + "; Serre duality", note)
        return SocleReport(lam, SIMPLE, None, why, "highest weight not identified for rank > 2")
    return SocleReport(lam, UNDETERMINED, justification="no criterion applies")


# --- classification -----------------------------------------------------------------

def classify_weight(d: RootDatum, weight: Sequence[int]) -> dict:
    if d.kind is not Kind.Q:
        raise UnsupportedTypeError(f"classification is implemented for type Q only, not {d.super_type}")
    lam = d.check_weight(weight)
    witnesses = is_generic(d, lam) or []
    return {
        "lambda": list(lam),
        "in_X_F": True,
        "in_X_F_plus": d.is_dominant(lam),
        "very_dominant": is_very_dominant(d, lam),
        "generic": bool(witnesses),
        "witnesses": [{"w": w.one_line(), "word": reduced_word(d, w), "lambda": list(l0)}
                      for w, l0 in witnesses],
    }
