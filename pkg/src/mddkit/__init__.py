"""Monomial divisibility diagrams and a signature Groebner basis engine."""

from .mdd import DiagramHandle, DiagramMetrics, DiagramStore, dedup
from .monomial import MonomialOrder, compare, crit, divides, lcm, mul, quotient

__all__ = [
    "DiagramHandle",
    "DiagramMetrics",
    "DiagramStore",
    "MonomialOrder",
    "compare",
    "crit",
    "dedup",
    "divides",
    "lcm",
    "mul",
    "quotient",
]
