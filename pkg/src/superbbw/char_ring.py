"""Formal characters and the classical Bott-Borel-Weil resolver for G_0.

A :class:`Character` is a finitely supported integer function on the weight
lattice.  Irreducible G_0 characters are built block by block from
Gelfand-Tsetlin patterns, which handles negative highest weights without any
polynomial division.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .errors import NonDominantError
from .root_data import RootDatum, Weight, dominant_rep_dot


class Character:
    """Immutable sparse map weight -> nonzero integer multiplicity."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable[tuple[Sequence[int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Weight, int] = {}
        for wt, mult in items:
            wt = tuple(int(x) for x in wt)
            acc[wt] = acc.get(wt, 0) + int(mult)
        self._terms = {wt: m for wt, m in sorted(acc.items()) if m}
        self._hash = None

    @classmethod
    def monomial(cls, weight: Sequence[int], mult: int = 1) -> "Character":
        return cls({tuple(weight): mult})

    @classmethod
    def zero(cls) -> "Character":
        return cls()

    def items(self):
        return self._terms.items()

    def weights(self):
        return self._terms.keys()

    def __getitem__(self, weight: Sequence[int]) -> int:
        return self._terms.get(tuple(weight), 0)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, Character):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other: "Character") -> "Character":
        if not isinstance(other, Character):
            if other == 0:
                return self
            return NotImplemented
        acc = dict(self._terms)
        for wt, m in other._terms.items():
            acc[wt] = acc.get(wt, 0) + m
        return Character(acc)

    __radd__ = __add__

    def __neg__(self) -> "Character":
        return Character({wt: -m for wt, m in self._terms.items()})

    def __sub__(self, other: "Character") -> "Character":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Character):
            return tensor(self, other)
        if isinstance(other, int):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(other, self)
        return NotImplemented

    @property
    def dim(self) -> int:
        return sum(self._terms.values())

    def is_nonnegative(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def to_json(self) -> dict:
        return {"terms": [{"wt": list(wt), "mult": m} for wt, m in self._terms.items()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Character":
        return cls((tuple(t["wt"]), t["mult"]) for t in data["terms"])

    def __repr__(self):
        return f"Character({self._terms!r})"

    def __str__(self):
        return format_character(self)


def format_character(ch: Character) -> str:
    if not ch:
        return "0"
    parts = []
    # highest weights first reads most naturally
    for wt, m in sorted(ch.items(), reverse=True):
        mono = "e^(" + ",".join(str(x) for x in wt) + ")"
        if m == 1:
            term = mono
        elif m == -1:
            term = "-" + mono
        else:
            term = f"{m}*{mono}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += " - " + term[1:] if term.startswith("-") else " + " + term
    return out


def add(c1: Character, c2: Character) -> Character:
    return c1 + c2


def scale(k: int, c: Character) -> Character:
    return Character({wt: k * m for wt, m in c.items()})


def tensor(c1: Character, c2: Character) -> Character:
    acc: dict[Weight, int] = {}
    for w1, m1 in c1.items():
        for w2, m2 in c2.items():
            wt = tuple(x + y for x, y in zip(w1, w2))
            acc[wt] = acc.get(wt, 0) + m1 * m2
    return Character(acc)


def dual(c: Character) -> Character:
    return Character({tuple(-x for x in wt): m for wt, m in c.items()})


def dim(c: Character) -> int:
    return c.dim


def character_sum(chars: Iterable[Character]) -> Character:
    acc: Counter = Counter()
    for c in chars:
        for wt, m in c.items():
            acc[wt] += m
    return Character(acc)


class LaurentPoly:
    """Integer Laurent polynomial in one variable t."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._coeffs = {e: c for e, c in sorted(acc.items()) if c}

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def coefficient(self, e: int) -> int:
        return self._coeffs.get(e, 0)

    def coefficient_list(self) -> list[int]:
        """Coefficients of t^0 .. t^deg (polynomials only)."""
        if not self._coeffs:
            return []
        if min(self._coeffs) < 0:
            raise ValueError("negative exponents present")
        return [self._coeffs.get(e, 0) for e in range(max(self._coeffs) + 1)]

    def __call__(self, t: int) -> int:
        return sum(c * t ** e for e, c in self._coeffs.items())

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    def substitute_power(self, k: int) -> "LaurentPoly":
        """p(t) -> p(t^k)."""
        return LaurentPoly({k * e: c for e, c in self._coeffs.items()})

    def to_json(self) -> dict:
        return {"coeffs": [{"exp": e, "coeff": c} for e, c in self._coeffs.items()]}

    def __repr__(self):
        return f"LaurentPoly({self._coeffs!r})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        out = ""
        for e, c in self._coeffs.items():
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            mag = abs(c)
            body = (str(mag) if mag != 1 or not mono else "") + mono
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out


# --- irreducible G_0 characters ------------------------------------------------

@lru_cache(maxsize=None)
def _gt_character(row: tuple[int, ...]) -> tuple[tuple[Weight, int], ...]:
    """Weights of the GL_m module of highest weight ``row`` via Gelfand-Tsetlin patterns."""
    m = len(row)
    if m == 1:
        return (((row[0],), 1),)
    acc: Counter = Counter()
    total = sum(row)
    for sub_row in _interlacing(row):
        last = total - sum(sub_row)
        for wt, mult in _gt_character(sub_row):
            acc[wt + (last,)] += mult
    return tuple(sorted(acc.items()))


def _interlacing(row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # row[i] >= sub[i] >= row[i+1]
    ranges = [range(row[i + 1], row[i] + 1) for i in range(len(row) - 1)]

    def rec(i, prefix):
        if i == len(ranges):
            yield tuple(prefix)
            return
        for x in ranges[i]:
            prefix.append(x)
            yield from rec(i + 1, prefix)
            prefix.pop()

    yield from rec(0, [])


def weyl_character(d: RootDatum, weight: Sequence[int]) -> Character:
    """Character of the irreducible G_0-module of dominant highest weight ``weight``."""
    weight = tuple(weight)
    if not d.is_dominant(weight):
        raise NonDominantError(f"{list(weight)} is not dominant for {d.super_type}")
    return _weyl_character(d, weight)


@lru_cache(maxsize=65536)
def _weyl_character(d: RootDatum, weight: Weight) -> Character:
    result = Character.monomial(())
    for block in d.super_type.blocks:
        block_char = Character(_gt_character(tuple(weight[i] for i in block)))
        # blocks are consecutive, so concatenating coordinates is the outer product
        result = Character({w1 + w2: m1 * m2 for w1, m1 in result.items()
                            for w2, m2 in block_char.items()})
    return result


def weyl_dimension(d: RootDatum, weight: Sequence[int]) -> int:
    """Weyl dimension formula, prod over positive roots of <l+rho, a^v>/<rho, a^v>."""
    num, den = 1, 1
    for block in d.super_type.blocks:
        for a in block:
            for b in block:
                if a < b:
                    num *= (weight[a] + d.rho[a]) - (weight[b] + d.rho[b])
                    den *= d.rho[a] - d.rho[b]
    return num // den


def euler_chi(d: RootDatum, weight: Sequence[int]) -> Character:
    """Euler characteristic sum (-1)^i ch H^i(G_0/B_0, weight)."""
    rep = dominant_rep_dot(d, weight)
    if rep is None:
        return Character.zero()
    w, mu = rep
    ch = _weyl_character(d, mu)
    return -ch if w.length % 2 else ch


def bbw_even(d: RootDatum, weight: Sequence[int]) -> Optional[tuple[int, Character]]:
    """Classical BBW: the single nonzero degree and its character, or None if singular."""
    rep = dominant_rep_dot(d, weight)
    if rep is None:
        return None
    w, mu = rep
    return w.length, _weyl_character(d, mu)
