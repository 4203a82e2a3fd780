"""Plain Buchberger algorithm; the reference against which the signature
engine is checked.  No signatures and no diagrams: reducers are found by
scanning the basis.
"""

from __future__ import annotations

import random
from typing import Optional, Sequence

from .poly import Polynomial, reduce_full, s_polynomial


def _divisor_finder(basis: Sequence[Polynomial], rng: Optional[random.Random] = None):
    leads = [(g.lm, g) for g in basis]

    def find(t):
        if rng is None:
            for lm, g in leads:
                if all(a <= b for a, b in zip(lm, t)):
                    return g, tuple(a - b for a, b in zip(t, lm))
            return None
        cands = [g for lm, g in leads if all(a <= b for a, b in zip(lm, t))]
        if not cands:
            return None
        g = rng.choice(cands)
        return g, tuple(a - b for a, b in zip(t, g.lm))

    return find


def plain_reduce(f: Polynomial, basis: Sequence[Polynomial], rng: Optional[random.Random] = None) -> Polynomial:
    """Normal form of ``f``: no term divisible by any ``lm(basis)``.

    With ``rng`` the reducer is picked at random among the candidates.
    """
    basis = [g for g in basis if g]
    if not basis or not f:
        return f
    return reduce_full(f, _divisor_finder(basis, rng))


def interreduce(basis: Sequence[Polynomial]) -> list[Polynomial]:
    """Reduced Groebner basis from any Groebner basis: minimal, monic,
    tail-reduced, sorted by increasing leading monomial."""
    gs = [g.monic() for g in basis if g]
    if not gs:
        return []
    key = gs[0].ring.order.key
    gs.sort(key=lambda g: key(g.lm))
    minimal: list[Polynomial] = []
    for g in gs:
        if not any(all(a <= b for a, b in zip(h.lm, g.lm)) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        out.append(plain_reduce(g, others).monic())
    return out


def reduces_to_zero(f: Polynomial, basis: Sequence[Polynomial]) -> bool:
    """Whether plain reduction of ``f`` by ``basis`` reaches zero."""
    basis = [g for g in basis if g]
    if not f:
        return True
    if not basis:
        return False
    return not reduce_full(f, _divisor_finder(basis), top_only=True)


def is_groebner(basis: Sequence[Polynomial]) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero.

    Pairs with coprime leading monomials are skipped; their S-polynomials
    always reduce to zero.
    """
    gs = [g for g in basis if g]
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            if _coprime(gs[i].lm, gs[j].lm):
                continue
            if not reduces_to_zero(s_polynomial(gs[i], gs[j]), gs):
                return False
    return True


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(map(max, a, b))


def _update(polys: list[Polynomial], current: set[int], pairs: set[tuple[int, int]], ih: int):
    """Gebauer-Moeller update after appending ``polys[ih]``.

    Returns the new set of live basis indices and pending pairs.
    """
    mh = polys[ih].lm

    def lcm_with(i):
        return _lcm(mh, polys[i].lm)

    candidates = set(current)
    kept: set[tuple[int, int]] = set()
    while candidates:
        ig = candidates.pop()
        l_hg = lcm_with(ig)
        if _coprime(mh, polys[ig].lm) or (
            not any(_divides(lcm_with(ix), l_hg) for ix in candidates)
            and not any(_divides(lcm_with(jx), l_hg) for _, jx in kept)
        ):
            kept.add((ih, ig))
    new_pairs = {(ih, ig) for ih, ig in kept if not _coprime(mh, polys[ig].lm)}
    for i, j in pairs:
        l_ij = _lcm(polys[i].lm, polys[j].lm)
        if not _divides(mh, l_ij) or lcm_with(i) == l_ij or lcm_with(j) == l_ij:
            new_pairs.add((i, j))
    live = {i for i in current if not _divides(mh, polys[i].lm)}
    live.add(ih)
    return live, new_pairs


def buchberger(polys: Sequence[Polynomial]) -> list[Polynomial]:
    """Reduced Groebner basis of the ideal generated by ``polys``.

    Pairs are selected by lowest degree of the lcm of their leading
    monomials (ties by the monomial order, then age); useless pairs are
    discarded by the Gebauer-Moeller criteria.
    """
    if not polys:
        raise ValueError("need at least one polynomial")
    if any(not f for f in polys):
        raise ValueError("input contains the zero polynomial")
    key = polys[0].ring.order.key
    elems: list[Polynomial] = []
    live: set[int] = set()
    pairs: set[tuple[int, int]] = set()
    for f in sorted((f.monic() for f in polys), key=lambda f: key(f.lm)):
        h = plain_reduce(f, [elems[i] for i in live])
        if h:
            elems.append(h.monic())
            live, pairs = _update(elems, live, pairs, len(elems) - 1)

    def rank(pair):
        i, j = pair
        lcm = _lcm(elems[i].lm, elems[j].lm)
        return (sum(lcm), key(lcm), max(i, j), min(i, j))

    while pairs:
        pair = min(pairs, key=rank)
        pairs.remove(pair)
        i, j = pair
        h = plain_reduce(s_polynomial(elems[i], elems[j]), [elems[k] for k in sorted(live)])
        if h:
            elems.append(h.monic())
            live, pairs = _update(elems, live, pairs, len(elems) - 1)
    return interreduce([elems[i] for i in sorted(live)])
