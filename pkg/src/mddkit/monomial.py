"""Exponent-vector monomials, monomial orders and the shared text format.

A monomial is a plain tuple of nonnegative ints.  Coordinates are stored
from the last variable down to the first: ``x1^a1 ... xn^an`` is the tuple
``(an, ..., a1)``, so that the first stored coordinate is the top level of
a diagram.  Everything that talks to the outside world (files, printing)
uses the natural ``x1 .. xn`` order and converts at the boundary with
:func:`from_natural` / :func:`to_natural`.
"""

from __future__ import annotations

import enum
from operator import add, le, sub
from typing import Iterable, Sequence, TextIO

Monomial = tuple[int, ...]

MAX_EXPONENT = 2**64 - 1


class DimensionError(ValueError):
    """Monomials of different dimensions were combined."""


class MonomialFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def _check_dims(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {len(a)} != {len(b)}")


def monomial(exps: Iterable[int]) -> Monomial:
    """Validate and freeze an exponent vector (storage order)."""
    m = tuple(int(e) for e in exps)
    for e in m:
        if e < 0 or e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} outside the unsigned 64-bit range")
    return m


def from_natural(exps: Sequence[int]) -> Monomial:
    """``(a1, ..., an)`` in variable order -> storage order."""
    return monomial(reversed(tuple(exps)))


def to_natural(m: Monomial) -> tuple[int, ...]:
    return tuple(reversed(m))


def one(n: int) -> Monomial:
    return (0,) * n


def degree(m: Monomial) -> int:
    return sum(m)


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a | b``, i.e. componentwise ``a <= b``."""
    _check_dims(a, b)
    return all(map(le, a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_dims(a, b)
    return tuple(map(max, a, b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    _check_dims(a, b)
    m = tuple(map(add, a, b))
    if any(e > MAX_EXPONENT for e in m):
        raise OverflowError("monomial product overflows 64-bit exponents")
    return m


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; requires ``b | a``."""
    if not divides(b, a):
        raise ValueError(f"{b} does not divide {a}")
    return tuple(map(sub, a, b))


def crit(lead_set: Iterable[Monomial], p_lead: Monomial) -> set[Monomial]:
    """Cofactors ``lcm(p_lead, s) / p_lead`` over ``s`` in ``lead_set``."""
    out = set()
    for s in lead_set:
        _check_dims(s, p_lead)
        out.add(tuple(max(x - y, 0) for x, y in zip(s, p_lead)))
    return out


class MonomialOrder(enum.Enum):
    """Monomial orders with ``x1 > x2 > ... > xn``.

    ``key(m)`` maps a storage-order monomial to a tuple whose natural
    comparison is the order itself.
    """

    GREVLEX = "grevlex"
    LEX = "lex"

    def key(self, m: Monomial) -> tuple[int, ...]:
        if self is MonomialOrder.GREVLEX:
            # degree first; ties broken by the smallest exponent of x_n,
            # then x_{n-1}, ..., all of which come first in storage
            return (sum(m),) + tuple(-e for e in m)
        return m[::-1]

    def neg_key(self, m: Monomial) -> tuple[int, ...]:
        """A key sorting in *decreasing* order (for min-heaps)."""
        if self is MonomialOrder.GREVLEX:
            return (-sum(m),) + m
        return tuple(-e for e in reversed(m))

    @classmethod
    def parse(cls, name: str) -> MonomialOrder:
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown monomial order {name!r}") from None


def compare(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """Three-way comparison: -1, 0 or 1."""
    _check_dims(a, b)
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# Monomial list text format: one monomial per line, exponents in x1..xn
# order, '#' comments, optional leading "n <dim>" line.

def parse_monomials(lines: Iterable[str], n: int | None = None) -> tuple[int, list[Monomial]]:
    """Parse the monomial list format; returns ``(dim, monomials)``."""
    gens: list[Monomial] = []
    seen_data = False
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "n" and not seen_data:
            if len(fields) != 2 or not fields[1].isdigit():
                raise MonomialFormatError("malformed dimension header", lineno)
            dim = int(fields[1])
            if n is not None and dim != n:
                raise MonomialFormatError(f"header says n={dim}, expected {n}", lineno)
            n = dim
            seen_data = True
            continue
        seen_data = True
        try:
            exps = [int(f) for f in fields]
        except ValueError:
            raise MonomialFormatError(f"non-integer exponent in {line!r}", lineno) from None
        if n is None:
            n = len(exps)
        if len(exps) != n:
            raise MonomialFormatError(f"expected {n} exponents, got {len(exps)}", lineno)
        try:
            gens.append(from_natural(exps))
        except OverflowError as exc:
            raise MonomialFormatError(str(exc), lineno) from None
    if n is None:
        raise MonomialFormatError("no monomials and no dimension header")
    if n < 1:
        raise MonomialFormatError("dimension must be at least 1")
    return n, gens


def read_monomials(path: str) -> tuple[int, list[Monomial]]:
    with open(path) as fh:
        return parse_monomials(fh)


def format_monomials(gens: Iterable[Monomial], n: int) -> str:
    lines = [f"n {n}"]
    lines.extend(" ".join(map(str, to_natural(m))) for m in gens)
    return "\n".join(lines) + "\n"


def write_monomials(out: TextIO, gens: Iterable[Monomial], n: int) -> None:
    out.write(format_monomials(gens, n))


def monomial_str(m: Monomial) -> str:
    """Human-readable ``x1^2*x3`` rendering (``1`` for the unit)."""
    parts = []
    for i, e in enumerate(to_natural(m), 1):
        if e == 1:
            parts.append(f"x{i}")
        elif e:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"
