"""Classical benchmark polynomial systems and random dense systems."""

from __future__ import annotations

from itertools import combinations_with_replacement

from .families import SplitMix64
from .monomial import MonomialOrder, from_natural
from .poly import DEFAULT_MODULUS, PolyRing, Polynomial


def cyclic(n: int, p: int = DEFAULT_MODULUS, order: MonomialOrder = MonomialOrder.GREVLEX) -> tuple[PolyRing, list[Polynomial]]:
    """Cyclic-n: the elementary symmetric-like cyclic sums, and ``x1...xn - 1``."""
    R = PolyRing(n, p, order)
    xs = [R.var(i) for i in range(1, n + 1)]
    polys = []
    for k in range(1, n):
        f = R.zero()
        for i in range(n):
            t = R.constant(1)
            for j in range(k):
                t = t * xs[(i + j) % n]
            f = f + t
        polys.append(f)
    prod = R.constant(1)
    for x in xs:
        prod = prod * x
    polys.append(prod - R.constant(1))
    return R, polys


def katsura(n: int, p: int = DEFAULT_MODULUS, order: MonomialOrder = MonomialOrder.GREVLEX) -> tuple[PolyRing, list[Polynomial]]:
    """Katsura-n in the ``n + 1`` unknowns ``u_0 .. u_n`` (named x1 .. x{n+1})."""
    R = PolyRing(n + 1, p, order)
    us = [R.var(i) for i in range(1, n + 2)]

    def u(k: int) -> Polynomial:
        k = abs(k)
        return us[k] if k <= n else R.zero()

    polys = []
    lin = R.zero()
    for i in range(-n, n + 1):
        lin = lin + u(i)
    polys.append(lin - R.constant(1))
    for m in range(n):
        f = R.zero()
        for i in range(-n, n + 1):
            f = f + u(i) * u(m - i)
        polys.append(f - u(m))
    return R, polys


def random_dense(n: int, degrees: list[int], seed: int, p: int = DEFAULT_MODULUS,
                 order: MonomialOrder = MonomialOrder.GREVLEX) -> tuple[PolyRing, list[Polynomial]]:
    """Polynomials with every monomial up to the given degree, random coefficients."""
    R = PolyRing(n, p, order)
    rng = SplitMix64(seed)
    polys = []
    for d in degrees:
        terms = []
        for k in range(d + 1):
            for combo in combinations_with_replacement(range(n), k):
                exps = [0] * n
                for v in combo:
                    exps[v] += 1
                terms.append((from_natural(exps), rng.uniform(p)))
        f = R.poly(terms)
        polys.append(f)
    return R, polys
