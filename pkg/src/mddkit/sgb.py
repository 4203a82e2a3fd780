"""Incremental signature Groebner bases with diagram-backed criteria.

One step extends a Groebner basis ``G`` by a polynomial ``f``.  Every new
element carries a signature, a monomial multiplier of ``f``; pairs
``(u, p)`` are processed by increasing signature ``u * sig(p)``.  A single
diagram holds ``lm(G)`` (Koszul criterion) together with the signatures
that already reduced to zero (syzygy criterion); a second diagram over
``lm(G_new)`` tells the reducer whether a divisor exists at all before the
linear search.
"""

from __future__ import annotations

import heapq
from operator import add, le, sub
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from .buchberger import interreduce
from .mdd import DiagramStore, NodeId
from .monomial import Monomial, crit, one
from .poly import Polynomial, PolyRing, reduce_full


@dataclass
class BasisElement:
    poly: Polynomial
    sig: Optional[Monomial] = None
    from_input: bool = False
    lm: Monomial = field(init=False, repr=False)

    def __post_init__(self):
        self.lm = self.poly.lm


@dataclass
class SgbStats:
    membership_tests: int = 0
    insertions: int = 0
    koszul_skips: int = 0
    syzygy_skips: int = 0
    zero_reductions: int = 0
    nonzero_reductions: int = 0
    pairs_processed: int = 0
    duplicate_pairs: int = 0
    filter_tests: int = 0
    filter_misses: int = 0
    signature_blocked: int = 0
    forced_checks: int = 0
    forced_nonzero: int = 0

    def __iadd__(self, other: SgbStats) -> SgbStats:
        for k, v in asdict(other).items():
            setattr(self, k, getattr(self, k) + v)
        return self

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass
class StepTrace:
    """Per-step record kept when tracing is requested (tests)."""

    signatures: list[Monomial] = field(default_factory=list)
    skipped: list[Monomial] = field(default_factory=list)


class ReducerFilter:
    """Diagram of ``<lm(basis)>`` kept in sync with a basis list."""

    def __init__(self, store: DiagramStore, basis: Sequence[BasisElement]):
        self.store = store
        self.root: Optional[NodeId] = store.build(b.lm for b in basis)

    def add(self, lm: Monomial) -> None:
        self.root = self.store.insert(self.root, lm)

    def __contains__(self, t: Monomial) -> bool:
        return self.store.contains(self.root, t)


def regular_reduce(
    u: Monomial,
    p: BasisElement,
    basis: Sequence[BasisElement],
    reducer_filter: ReducerFilter,
    ring: PolyRing,
    stats: Optional[SgbStats] = None,
    check_filter: bool = False,
) -> Polynomial:
    """Fully reduce ``u * p`` by the admissible multiples of ``basis``.

    A multiple ``v * g`` is admissible when ``g`` comes from the input
    basis, or when ``v * sig(g)`` is strictly below ``u * sig(p)``.
    """
    stats = stats if stats is not None else SgbStats()
    order = ring.order
    key = order.key
    sig_key = key(tuple(map(add, u, p.sig)))

    def find(t):
        stats.filter_tests += 1
        if t not in reducer_filter:
            stats.filter_misses += 1
            if check_filter:
                assert not any(all(a <= b for a, b in zip(g.lm, t)) for g in basis), (
                    "reducer filter out of sync with basis"
                )
            return None
        for g in basis:
            lm = g.lm
            if not all(map(le, lm, t)):
                continue
            v = tuple(map(sub, t, lm))
            if g.from_input or key(tuple(map(add, v, g.sig))) < sig_key:
                return g.poly, v
        stats.signature_blocked += 1
        return None

    return reduce_full(p.poly.mul_term(u), find)


def _sig_of(u: Monomial, p: BasisElement) -> Monomial:
    return tuple(map(add, u, p.sig))


def _new_pairs(basis: Sequence[BasisElement], q: BasisElement, order, pair_rule: str) -> list:
    """Pairs ``(multiplier, element)`` created by appending ``q``.

    Multipliers of ``q`` equal to 1 are dropped: they would revisit the
    signature just processed.
    """
    if pair_rule == "crit":
        return [(v, q) for v in crit([s.lm for s in basis], q.lm) if any(v)]
    own: set[Monomial] = set()
    other = []
    for s in basis:
        lcm = tuple(map(max, s.lm, q.lm))
        v = tuple(a - b for a, b in zip(lcm, q.lm))
        if s.from_input:
            own.add(v)
            continue
        w = tuple(a - b for a, b in zip(lcm, s.lm))
        kv = order.key(_sig_of(v, q))
        kw = order.key(_sig_of(w, s))
        if kv > kw:
            own.add(v)
        elif kw > kv:
            other.append((w, s))
    return [(v, q) for v in own if any(v)] + other


def sgb_step(
    G: Sequence[Polynomial],
    f: Polynomial,
    *,
    store: Optional[DiagramStore] = None,
    check_criteria: bool = False,
    check_filter: bool = False,
    trace: Optional[StepTrace] = None,
    pair_rule: str = "jpair",
) -> tuple[list[BasisElement], SgbStats]:
    """Groebner basis of ``<G, f>`` given a Groebner basis ``G``.

    ``check_criteria`` force-reduces every pair the criteria skip and
    records in ``stats.forced_nonzero`` how many did not reach zero.

    ``pair_rule`` selects which multiple represents the S-pair of a new
    element ``q`` with an older ``s``: ``"jpair"`` takes the side of larger
    signature (and drops pairs whose sides have equal signatures);
    ``"crit"`` always takes ``v * q`` for ``v`` in ``crit(basis, q)``.
    """
    if pair_rule not in ("jpair", "crit"):
        raise ValueError(f"unknown pair rule {pair_rule!r}")
    if not f:
        raise ValueError("cannot add the zero polynomial")
    ring = f.ring
    if any(g.ring != ring for g in G):
        raise ValueError("polynomials from different rings")
    order = ring.order
    n = ring.n
    store = store or DiagramStore(n)
    stats = SgbStats()

    basis = [BasisElement(g.monic(), None, True) for g in G if g]
    crit_root: Optional[NodeId] = store.build(b.lm for b in basis)
    koszul_root = crit_root
    reducers = ReducerFilter(store, basis)

    seq = 0
    start = BasisElement(f, one(n), False)
    queue: list = [(order.key(start.sig), seq, one(n), start)]

    while queue:
        sig_key, _, u, p = heapq.heappop(queue)
        # all pairs with the same signature regularly reduce alike
        while queue and queue[0][0] == sig_key:
            heapq.heappop(queue)
            stats.duplicate_pairs += 1
        sig = _sig_of(u, p)
        stats.pairs_processed += 1
        if trace is not None:
            trace.signatures.append(sig)
        stats.membership_tests += 1
        if store.contains(crit_root, sig):
            if store.contains(koszul_root, sig):
                stats.koszul_skips += 1
            else:
                stats.syzygy_skips += 1
            if trace is not None:
                trace.skipped.append(sig)
            if check_criteria:
                stats.forced_checks += 1
                if regular_reduce(u, p, basis, reducers, ring, SgbStats()):
                    stats.forced_nonzero += 1
            continue
        q = regular_reduce(u, p, basis, reducers, ring, stats, check_filter)
        if not q:
            stats.zero_reductions += 1
            crit_root = store.insert(crit_root, sig)
            stats.insertions += 1
            continue
        stats.nonzero_reductions += 1
        q = q.monic()
        new = BasisElement(q, sig, False)
        for pair in _new_pairs(basis, new, order, pair_rule):
            seq += 1
            heapq.heappush(queue, (order.key(_sig_of(*pair)), seq) + pair)
        basis.append(new)
        reducers.add(q.lm)
    return basis, stats


def sgb_incremental(
    polys: Sequence[Polynomial],
    *,
    check_criteria: bool = False,
    check_filter: bool = False,
    traces: Optional[list[StepTrace]] = None,
    pair_rule: str = "jpair",
) -> tuple[list[Polynomial], SgbStats]:
    """Groebner basis of ``<polys>``, adding one generator at a time.

    Between steps and at the end the basis is interreduced.
    """
    if not polys:
        raise ValueError("need at least one polynomial")
    if any(not f for f in polys):
        raise ValueError("input contains the zero polynomial")
    total = SgbStats()
    G = [polys[0].monic()]
    for f in polys[1:]:
        trace = StepTrace() if traces is not None else None
        basis, stats = sgb_step(
            G, f, check_criteria=check_criteria, check_filter=check_filter, trace=trace, pair_rule=pair_rule
        )
        if traces is not None:
            traces.append(trace)
        total += stats
        G = interreduce([b.poly for b in basis])
    return G, total


def lead_ideals_equal(a: Sequence[Polynomial], b: Sequence[Polynomial]) -> bool:
    """Whether two bases have the same leading-monomial ideal.

    Both diagrams live in one store, so equal ideals share a root.
    """
    if not a or not b:
        return not a and not b
    store = DiagramStore(a[0].ring.n)
    ra = store.build(g.lm for g in a if g)
    rb = store.build(g.lm for g in b if g)
    return ra == rb
