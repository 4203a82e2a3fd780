"""Sparse polynomials over a prime field.

Polynomials are immutable, with terms ``(monomial, coefficient)`` kept in
strictly decreasing order for the ring's monomial order.  Monomials use
the storage order of :mod:`mddkit.monomial`.
"""

from __future__ import annotations

import heapq
import re
from operator import add
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .monomial import Monomial, MonomialOrder, one, to_natural

DEFAULT_MODULUS = 65521


# -- field ----------------------------------------------------------------

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def fadd(a: int, b: int, p: int) -> int:
    return (a + b) % p


def fsub(a: int, b: int, p: int) -> int:
    return (a - b) % p


def fmul(a: int, b: int, p: int) -> int:
    return a * b % p


def finv(a: int, p: int) -> int:
    if a % p == 0:
        raise ZeroDivisionError("0 has no inverse")
    return pow(a, -1, p)


# -- ring and polynomials ---------------------------------------------------

@dataclass(frozen=True)
class PolyRing:
    n: int
    p: int = DEFAULT_MODULUS
    order: MonomialOrder = MonomialOrder.GREVLEX

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one variable")
        if self.p == 2 or not _is_prime(self.p) or self.p >= 2**31:
            raise ValueError(f"modulus must be an odd prime below 2^31, got {self.p}")

    def poly(self, terms: Iterable[tuple[Monomial, int]]) -> Polynomial:
        """Build a polynomial from arbitrary terms (summing duplicates)."""
        acc: dict[Monomial, int] = {}
        for m, c in terms:
            if len(m) != self.n:
                raise ValueError(f"monomial {m} not in {self.n} variables")
            acc[m] = (acc.get(m, 0) + c) % self.p
        return self._from_dict(acc)

    def _from_dict(self, acc: dict[Monomial, int]) -> Polynomial:
        key = self.order.key
        items = sorted(((m, c) for m, c in acc.items() if c), key=lambda t: key(t[0]), reverse=True)
        return Polynomial(self, tuple(items))

    def zero(self) -> Polynomial:
        return Polynomial(self, ())

    def constant(self, c: int) -> Polynomial:
        return self.poly([(one(self.n), c)])

    def var(self, i: int) -> Polynomial:
        """The variable ``x_i`` (1-based, natural numbering)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"no variable x{i}")
        m = [0] * self.n
        m[self.n - i] = 1
        return self.poly([(tuple(m), 1)])


@dataclass(frozen=True)
class Polynomial:
    ring: PolyRing = field(repr=False, compare=False)
    terms: tuple[tuple[Monomial, int], ...]

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lm(self) -> Monomial:
        return self.terms[0][0]

    @property
    def lc(self) -> int:
        return self.terms[0][1]

    def monic(self) -> Polynomial:
        if not self.terms or self.lc == 1:
            return self
        p = self.ring.p
        inv = finv(self.lc, p)
        return Polynomial(self.ring, tuple((m, c * inv % p) for m, c in self.terms))

    def mul_term(self, u: Monomial, c: int = 1) -> Polynomial:
        """``c * u * self``; order is preserved since orders are multiplicative."""
        p = self.ring.p
        c %= p
        if not c:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            tuple((tuple(map(add, u, m)), cc * c % p) for m, cc in self.terms),
        )

    def __add__(self, other: Polynomial) -> Polynomial:
        acc = dict(self.terms)
        p = self.ring.p
        for m, c in other.terms:
            acc[m] = (acc.get(m, 0) + c) % p
        return self.ring._from_dict(acc)

    def __neg__(self) -> Polynomial:
        p = self.ring.p
        return Polynomial(self.ring, tuple((m, -c % p) for m, c in self.terms))

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        acc: dict[Monomial, int] = {}
        p = self.ring.p
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(map(add, m1, m2))
                acc[m] = (acc.get(m, 0) + c1 * c2) % p
        return self.ring._from_dict(acc)

    def __pow__(self, k: int) -> Polynomial:
        out = self.ring.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __str__(self) -> str:
        return format_poly(self)


# -- reduction --------------------------------------------------------------

# find(t) returns (reducer, cofactor) such that cofactor * lm(reducer) == t,
# or None when the term t is to be kept
ReducerFinder = Callable[[Monomial], Optional[tuple[Polynomial, Monomial]]]


def reduce_full(f: Polynomial, find: ReducerFinder, top_only: bool = False) -> Polynomial:
    """Reduce every term of ``f``, largest first, using ``find``.

    With ``top_only`` the reduction stops at the first irreducible term and
    returns the (unsorted-tail) remainder; only its zeroness and leading
    term are meaningful.
    """
    ring = f.ring
    p = ring.p
    neg_key = ring.order.neg_key
    work = dict(f.terms)
    heap = [(neg_key(m), m) for m in work]
    heapq.heapify(heap)
    kept = []
    while heap:
        _, t = heapq.heappop(heap)
        c = work.pop(t)
        if not c:
            continue
        hit = find(t)
        if hit is None:
            kept.append((t, c))
            if top_only:
                kept.extend((m, cc) for m, cc in work.items() if cc)
                break
            continue
        g, u = hit
        factor = c * finv(g.lc, p) % p
        for gm, gc in g.terms[1:]:
            m = tuple(map(add, u, gm))
            old = work.get(m)
            if old is None:
                work[m] = -factor * gc % p
                heapq.heappush(heap, (neg_key(m), m))
            else:
                work[m] = (old - factor * gc) % p
    return Polynomial(ring, tuple(kept))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    lcm = tuple(map(max, f.lm, g.lm))
    uf = tuple(a - b for a, b in zip(lcm, f.lm))
    ug = tuple(a - b for a, b in zip(lcm, g.lm))
    p = f.ring.p
    return f.mul_term(uf, finv(f.lc, p)) - g.mul_term(ug, finv(g.lc, p))


# -- text format --------------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class PolySystem:
    ring: PolyRing
    polys: list[Polynomial]


_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|(\^)|(\*)|([+\-−]))")


def parse_poly(text: str, ring: PolyRing, line: int = 1, col0: int = 0) -> Polynomial:
    """Parse ``c*x1^2*x2 + 3*x3 - 1``-style input."""
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        mt = _TOKEN.match(stripped, pos)
        if not mt:
            ws = len(stripped[pos:]) - len(stripped[pos:].lstrip())
            raise ParseError(f"unexpected character {stripped[pos + ws]!r}", line, col0 + pos + ws + 1)
        col = col0 + mt.end() - len(mt.group(0).lstrip()) + 1
        kind = ("int", "var", "pow", "mul", "sign")[mt.lastindex - 1]
        tokens.append((kind, mt.group(mt.lastindex), col))
        pos = mt.end()
    end_col = col0 + len(stripped) + 1
    p, n = ring.p, ring.n
    terms = []
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else ("end", "", end_col)

    if not tokens:
        raise ParseError("empty polynomial", line, end_col)
    while True:
        sign = 1
        kind, val, col = peek()
        if kind == "sign":
            sign = 1 if val == "+" else -1
            i += 1
        elif terms:
            raise ParseError(f"expected '+' or '-', got {val or 'end of line'!r}", line, col)
        coeff = sign
        exps = [0] * n
        expect_factor = True
        while expect_factor:
            kind, val, col = peek()
            if kind == "int":
                coeff = coeff * int(val)
                i += 1
            elif kind == "var":
                idx = int(val)
                if not 1 <= idx <= n:
                    raise ParseError(f"variable x{idx} out of range x1..x{n}", line, col)
                i += 1
                e = 1
                if peek()[0] == "pow":
                    i += 1
                    k2, v2, c2 = peek()
                    if k2 != "int":
                        raise ParseError("expected exponent after '^'", line, c2)
                    e = int(v2)
                    i += 1
                exps[n - idx] += e
            else:
                raise ParseError(f"expected a coefficient or variable, got {val or 'end of line'!r}", line, col)
            if peek()[0] == "mul":
                i += 1
            else:
                expect_factor = False
        terms.append((tuple(exps), coeff % p))
        if peek()[0] == "end":
            break
    return ring.poly(terms)


def parse_system(text: str) -> PolySystem:
    """Parse a polynomial system file (``p``/``n``/``order`` header)."""
    header = {"p": str(DEFAULT_MODULUS), "order": "grevlex"}
    ring = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        head = stripped.split()
        if ring is None and head[0] in ("p", "n", "order") and len(head) == 2 and not polys:
            header[head[0]] = head[1]
            continue
        if ring is None:
            if "n" not in header:
                raise ParseError("missing 'n <dim>' header", lineno, 1)
            try:
                ring = PolyRing(int(header["n"]), int(header["p"]), MonomialOrder.parse(header["order"]))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, 1) from None
        indent = len(raw) - len(raw.lstrip())
        polys.append(parse_poly(raw.strip(), ring, lineno, indent))
    if ring is None:
        if "n" not in header:
            raise ParseError("missing 'n <dim>' header", 1, 1)
        ring = PolyRing(int(header["n"]), int(header["p"]), MonomialOrder.parse(header["order"]))
    return PolySystem(ring, polys)


def read_system(path: str) -> PolySystem:
    with open(path) as fh:
        return parse_system(fh.read())


def _term_str(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(to_natural(m), 1):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    p = f.ring.p
    out = []
    for k, (m, c) in enumerate(f.terms):
        neg = c > p // 2
        mag = p - c if neg else c
        mono = _term_str(m)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)


def format_system(ring: PolyRing, polys: Sequence[Polynomial]) -> str:
    lines = [f"p {ring.p}", f"n {ring.n}", f"order {ring.order.value}"]
    lines.extend(format_poly(f) for f in polys)
    return "\n".join(lines) + "\n"
