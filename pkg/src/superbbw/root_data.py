"""Root data, Weyl groups and dot actions for the even parts of Q(n) and GL(n|n).

Weights are plain integer tuples in the epsilon basis (followed by the delta
basis for GL(n|n)).  A Weyl element is a block-preserving permutation of the
coordinates; ``perm[i] = j`` means the element sends e_i to e_j, so it moves
coordinate ``i`` of a weight to position ``j``.

Conventions fixed here and used everywhere downstream:

* rho = (n-1, ..., 1, 0) on every block, so <rho, a^v> = 1 on simple roots;
* a weight is dominant when every simple coroot pairing is >= 0;
* for Q(n) the weights of (g1/b1)^* are the negative roots e_j - e_i (i < j);
* for GL(n|n), with b lower triangular in all four blocks, g1/b1 is spanned by
  the strictly upper parts of the odd blocks, giving the roots
  e_i - d_j and d_i - e_j for i < j; their negatives are the weights of
  (g1/b1)^*.  The diagonal pairs (e_i, d_i) belong to the detecting
  subalgebra gl(1|1)^n.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .errors import UnsupportedTypeError

Weight = tuple[int, ...]


class Kind(enum.Enum):
    Q = "q"
    GLNN = "glnn"


@dataclass(frozen=True)
class SuperType:
    kind: Kind
    rank: int

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise UnsupportedTypeError(f"rank must be a positive integer, got {self.rank!r}")
        if not isinstance(self.kind, Kind):
            object.__setattr__(self, "kind", parse_kind(self.kind))

    @property
    def lattice_dim(self) -> int:
        return self.rank if self.kind is Kind.Q else 2 * self.rank

    @property
    def blocks(self) -> tuple[range, ...]:
        n = self.rank
        if self.kind is Kind.Q:
            return (range(0, n),)
        return (range(0, n), range(n, 2 * n))

    def __str__(self):
        n = self.rank
        return f"Q({n})" if self.kind is Kind.Q else f"GL({n}|{n})"


def parse_kind(value) -> Kind:
    if isinstance(value, Kind):
        return value
    key = str(value).strip().lower()
    aliases = {"q": Kind.Q, "typeq": Kind.Q, "glnn": Kind.GLNN, "gl": Kind.GLNN,
               "typeglnn": Kind.GLNN}
    if key not in aliases:
        raise UnsupportedTypeError(f"unsupported super type {value!r} (expected q or glnn)")
    return aliases[key]


def _unit(dim: int, i: int) -> list[int]:
    v = [0] * dim
    v[i] = 1
    return v


def _root(dim: int, i: int, j: int) -> Weight:
    """e_i - e_j in a lattice of dimension ``dim`` (0-based coordinates)."""
    v = _unit(dim, i)
    v[j] -= 1
    return tuple(v)


def add(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Sequence[int]) -> Weight:
    return tuple(-x for x in a)


@dataclass(frozen=True)
class WeylElement:
    perm: tuple[int, ...]
    length: int = field(init=False, compare=False)

    def __post_init__(self):
        p = tuple(self.perm)
        if sorted(p) != list(range(len(p))):
            raise ValueError(f"{list(p)} is not a permutation of 0..{len(p) - 1}")
        object.__setattr__(self, "perm", p)
        inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
        object.__setattr__(self, "length", inv)

    @classmethod
    def identity(cls, dim: int) -> "WeylElement":
        return cls(tuple(range(dim)))

    def act(self, weight: Sequence[int]) -> Weight:
        out = [0] * len(self.perm)
        for i, x in enumerate(weight):
            out[self.perm[i]] = x
        return tuple(out)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (self * other)(v) = self(other(v))
        return WeylElement(tuple(self.perm[other.perm[i]] for i in range(len(self.perm))))

    def inverse(self) -> "WeylElement":
        out = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            out[j] = i
        return WeylElement(tuple(out))

    @property
    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))

    def one_line(self) -> list[int]:
        """1-based one-line notation, the form used in JSON output."""
        return [j + 1 for j in self.perm]

    def sort_key(self):
        return (self.length, self.perm)


@dataclass(frozen=True)
class RootDatum:
    super_type: SuperType
    even_simple: tuple[Weight, ...]
    even_positive: tuple[Weight, ...]
    odd_positive: tuple[Weight, ...]
    rho: Weight

    @property
    def dim(self) -> int:
        return self.super_type.lattice_dim

    @property
    def rank(self) -> int:
        return self.super_type.rank

    @property
    def kind(self) -> Kind:
        return self.super_type.kind

    @property
    def negative_odd(self) -> tuple[Weight, ...]:
        return tuple(neg(r) for r in self.odd_positive)

    @property
    def simple_indices(self) -> tuple[tuple[int, int], ...]:
        """Coordinate pairs (i, i+1) of the simple roots, in simple-root order."""
        out = []
        for block in self.super_type.blocks:
            out.extend((i, i + 1) for i in block[:-1])
        return tuple(out)

    def pairings(self, weight: Sequence[int]) -> tuple[int, ...]:
        """All simple coroot pairings <weight, a_k^v>, k = 1..r."""
        return tuple(weight[i] - weight[j] for i, j in self.simple_indices)

    def is_dominant(self, weight: Sequence[int]) -> bool:
        return all(p >= 0 for p in self.pairings(weight))

    def in_closed_alcove(self, weight: Sequence[int]) -> bool:
        """Membership in C_Z-bar: <weight + rho, a^v> >= 0 for every simple a."""
        return self.is_dominant(add(weight, self.rho))

    def simple_reflection(self, k: int) -> WeylElement:
        """s_k for the 1-based simple-root index k."""
        pairs = self.simple_indices
        if not 1 <= k <= len(pairs):
            raise ValueError(f"simple reflection index {k} out of range 1..{len(pairs)}")
        i, j = pairs[k - 1]
        p = list(range(self.dim))
        p[i], p[j] = j, i
        return WeylElement(tuple(p))

    def identity(self) -> WeylElement:
        return WeylElement.identity(self.dim)

    def check_weight(self, weight: Sequence[int]) -> Weight:
        w = tuple(int(x) for x in weight)
        if len(w) != self.dim:
            raise ValueError(f"weight {list(weight)} has length {len(w)}, "
                             f"expected {self.dim} for {self.super_type}")
        return w


@lru_cache(maxsize=None)
def build_root_datum(t: SuperType) -> RootDatum:
    n, dim = t.rank, t.lattice_dim
    simple, positive = [], []
    for block in t.blocks:
        simple.extend(_root(dim, i, i + 1) for i in block[:-1])
        positive.extend(_root(dim, i, j) for i, j in itertools.combinations(block, 2))
    if t.kind is Kind.Q:
        odd = list(positive)
    else:
        odd = [_root(dim, i, n + j) for i in range(n) for j in range(n) if i < j]
        odd += [_root(dim, n + i, j) for i in range(n) for j in range(n) if i < j]
    rho = tuple(b.stop - 1 - i for b in t.blocks for i in b)
    return RootDatum(t, tuple(simple), tuple(positive), tuple(odd), rho)


def root_datum(kind, rank: int) -> RootDatum:
    return build_root_datum(SuperType(parse_kind(kind), rank))


def pairing(d: RootDatum, weight: Sequence[int], alpha: Sequence[int]) -> int:
    """<weight, alpha^v> for a simple root alpha (type A coroots)."""
    alpha = tuple(alpha)
    if alpha not in d.even_simple:
        raise ValueError(f"{list(alpha)} is not a simple root of {d.super_type}")
    i, j = d.simple_indices[d.even_simple.index(alpha)]
    return weight[i] - weight[j]


def weyl_elements(d: RootDatum) -> Iterator[WeylElement]:
    """Every element of W_0 once, ordered by (length, one-line notation)."""
    return iter(_weyl_elements(d.super_type))


@lru_cache(maxsize=None)
def _weyl_elements(t: SuperType) -> tuple[WeylElement, ...]:
    per_block = [list(itertools.permutations(b)) for b in t.blocks]
    elems = [WeylElement(sum(choice, ())) for choice in itertools.product(*per_block)]
    return tuple(sorted(elems, key=WeylElement.sort_key))


def act(w: WeylElement, weight: Sequence[int]) -> Weight:
    return w.act(weight)


def dot_act(d: RootDatum, w: WeylElement, weight: Sequence[int]) -> Weight:
    """w . weight = w(weight + rho) - rho."""
    return sub(w.act(add(weight, d.rho)), d.rho)


def dominant_rep_dot(d: RootDatum, weight: Sequence[int]) -> Optional[tuple[WeylElement, Weight]]:
    """The unique (w, mu) with w . weight = mu dominant, or None when singular.

    Singular means weight + rho repeats a coordinate within some block.
    """
    v = add(weight, d.rho)
    perm = [0] * d.dim
    for block in d.super_type.blocks:
        vals = [v[i] for i in block]
        if len(set(vals)) != len(vals):
            return None
        # sort strictly decreasing; position of i is its rank in the block
        order = sorted(block, key=lambda i: -v[i])
        for pos, i in enumerate(order):
            perm[i] = block.start + pos
    w = WeylElement(tuple(perm))
    return w, sub(w.act(v), d.rho)


def parse_word(d: RootDatum, word: str) -> WeylElement:
    """Parse ``s1.s2.s1`` (product left to right, i.e. s1 * s2 * s1); ``1`` is the identity."""
    word = word.strip()
    w = d.identity()
    if word in ("", "1", "e", "id"):
        return w
    for token in word.split("."):
        token = token.strip()
        if not token.startswith("s") or not token[1:].isdigit():
            raise ValueError(f"malformed Weyl word token {token!r} (expected s<k>)")
        w = w * d.simple_reflection(int(token[1:]))
    return w


def reduced_word(d: RootDatum, w: WeylElement) -> str:
    """A reduced word for w, written like ``s1.s2``; ``1`` for the identity."""
    letters = []
    cur = w
    pairs = d.simple_indices
    # peel left descents: if cur sends e_i after e_{i+1} in value, s_k * cur is shorter
    while not cur.is_identity:
        inv = cur.inverse().perm  # inv[pos] = source coordinate now at pos
        for k, (i, j) in enumerate(pairs, start=1):
            if inv[i] > inv[j]:
                letters.append(k)
                cur = d.simple_reflection(k) * cur
                break
        else:  # pragma: no cover - every non-identity element has a left descent
            raise AssertionError("no descent found")
    return ".".join(f"s{k}" for k in letters) if letters else "1"
