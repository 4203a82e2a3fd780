"""Benchmark families of monomial ideals.

Random families are driven by SplitMix64 (Steele, Lea & Flood 2014) so
that a ``(family, n, r, bound, seed)`` tuple produces the same generators
in any implementation:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)             (all arithmetic mod 2**64)

Bounded draws ``uniform(k)`` on ``{0, ..., k-1}`` use rejection: draws
``>= 2**64 - (2**64 % k)`` are discarded, the rest are reduced mod ``k``.
Monomials are drawn one at a time with exponents for ``x1, ..., xn`` in
that order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .monomial import Monomial, from_natural

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self, k: int) -> int:
        if k <= 0:
            raise ValueError("empty range")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next()
            if x < limit:
                return x % k


class Family(enum.Enum):
    RANDOM_LARGE_DEGREE = "random-large-degree"
    RANDOM_SMALL_DEGREE = "random-small-degree"
    RANDOM_SQUAREFREE = "random-squarefree"
    RANDOM_FIXED_TOTAL_DEGREE = "random-fixed-total-degree"
    COMPLETE_DEGREE = "complete-degree"


# bound used when none is given
DEFAULT_BOUND = {
    Family.RANDOM_LARGE_DEGREE: 30000,
    Family.RANDOM_SMALL_DEGREE: 10,
    Family.RANDOM_SQUAREFREE: 1,
    Family.RANDOM_FIXED_TOTAL_DEGREE: 12,
    Family.COMPLETE_DEGREE: 2,
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int
    r: int = 1
    bound: int | None = None
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.r < 1 and self.family is not Family.COMPLETE_DEGREE:
            raise ValueError("r must be at least 1")
        if self.bound is not None and self.bound < 0:
            raise ValueError("bound must be nonnegative")
        if self.family is Family.RANDOM_SQUAREFREE and self.bound not in (None, 1):
            raise ValueError("squarefree monomials have exponents in {0, 1}")

    @property
    def effective_bound(self) -> int:
        return DEFAULT_BOUND[self.family] if self.bound is None else self.bound

    @property
    def label(self) -> str:
        if self.family is Family.COMPLETE_DEGREE:
            return f"{self.family.value}:n={self.n}:d={self.effective_bound}"
        return f"{self.family.value}:n={self.n}:r={self.r}:b={self.effective_bound}:s={self.seed}"


def compositions_count(d: int, n: int) -> int:
    """Number of monomials of total degree ``d`` in ``n`` variables."""
    return comb(d + n - 1, n - 1)


def unrank_composition(index: int, d: int, n: int) -> tuple[int, ...]:
    """The ``index``-th composition of ``d`` into ``n`` parts.

    Compositions are ranked by the bar positions of their stars-and-bars
    word, in lexicographic order of the sorted ``n - 1`` bar positions.
    """
    slots = d + n - 1
    bars = []
    k = n - 1
    pos = 0
    # combinatorial number system, lexicographic
    while k > 0:
        c = comb(slots - pos - 1, k - 1)
        if index < c:
            bars.append(pos)
            k -= 1
        else:
            index -= c
        pos += 1
    parts = []
    prev = -1
    for b in bars:
        parts.append(b - prev - 1)
        prev = b
    parts.append(slots - prev - 1)
    return tuple(parts)


def complete_degree(n: int, d: int) -> list[Monomial]:
    """All monomials of total degree exactly ``d``."""
    out = []
    for bars in combinations(range(d + n - 1), n - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(d + n - 1 - prev - 1)
        out.append(from_natural(parts))
    return out


def generate(spec: FamilySpec) -> list[Monomial]:
    fam, n = spec.family, spec.n
    b = spec.effective_bound
    if fam is Family.COMPLETE_DEGREE:
        return complete_degree(n, b)
    rng = SplitMix64(spec.seed)
    out = []
    if fam is Family.RANDOM_FIXED_TOTAL_DEGREE:
        total = compositions_count(b, n)
        for _ in range(spec.r):
            out.append(from_natural(unrank_composition(rng.uniform(total), b, n)))
        return out
    for _ in range(spec.r):
        out.append(from_natural([rng.uniform(b + 1) for _ in range(n)]))
    return out


def random_monomials(n: int, count: int, bound: int, seed: int) -> list[Monomial]:
    """Query monomials with i.i.d. exponents uniform on ``{0..bound}``."""
    rng = SplitMix64(seed)
    return [from_natural([rng.uniform(bound + 1) for _ in range(n)]) for _ in range(count)]


def minimalize(gens: list[Monomial]) -> list[Monomial]:
    """Drop duplicates and generators divisible by another generator.

    Survivors keep their first-occurrence order.
    """
    uniq = list(dict.fromkeys(gens))
    by_degree = sorted(uniq, key=sum)
    kept: list[Monomial] = []
    for m in by_degree:
        if not any(all(x <= y for x, y in zip(g, m)) for g in kept):
            kept.append(m)
    keep = set(kept)
    return [m for m in uniq if m in keep]
