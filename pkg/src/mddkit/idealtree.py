"""Explicit (unshared) ideal trees.

This is the slow reference model the diagrams are checked against: every
subtree is a separate value and equality is structural.  The empty ideal
is ``None`` and sits outside the tree type.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .monomial import DimensionError, Monomial, _check_dims


class Leaf:
    """The unique 0-tree; represents the full ideal of N^0."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    depth = 0

    def __repr__(self):
        return "Leaf()"


LEAF = Leaf()


@dataclass(frozen=True)
class Branch:
    labels: tuple[int, ...]
    children: tuple["Tree", ...]

    def __post_init__(self):
        if not self.labels:
            raise ValueError("a branch needs at least one child")
        if len(self.labels) != len(self.children):
            raise ValueError("labels and children differ in length")
        if any(a >= b for a, b in zip(self.labels, self.labels[1:])):
            raise ValueError("labels must be strictly increasing")
        if len({c.depth for c in self.children}) != 1:
            raise ValueError("children have different depths")

    @property
    def depth(self) -> int:
        return self.children[0].depth + 1

    def items(self):
        return zip(self.labels, self.children)


Tree = Leaf | Branch
MaybeTree = Optional[Tree]


def naive_contains(gens: Iterable[Monomial], m: Monomial) -> bool:
    """Ground truth: some generator divides ``m``."""
    for g in gens:
        _check_dims(g, m)
        if all(x <= y for x, y in zip(g, m)):
            return True
    return False


def tree_quo(t: Tree, e: int) -> MaybeTree:
    """Child whose ideal is the quotient at ``e`` (``None`` if empty)."""
    if isinstance(t, Leaf):
        raise ValueError("quotient of a 0-tree is undefined")
    j = bisect_right(t.labels, e)
    if j == 0:
        return None
    return t.children[j - 1]


def tree_contains(t: Tree, m: Monomial) -> bool:
    if len(m) != t.depth:
        raise DimensionError(f"tree depth {t.depth} != monomial dimension {len(m)}")
    node: MaybeTree = t
    for e in m:
        node = tree_quo(node, e)
        if node is None:
            return False
    return True


def singleton(m: Sequence[int]) -> Tree:
    t: Tree = LEAF
    for e in reversed(m):
        t = Branch((e,), (t,))
    return t


def tree_insert(t: MaybeTree, m: Monomial) -> Tree:
    """Ideal tree of ``ideal(t) + <m>``."""
    if t is None:
        return singleton(m)
    if len(m) != t.depth:
        raise DimensionError(f"tree depth {t.depth} != monomial dimension {len(m)}")
    return _insert(t, m)


def _insert(t: MaybeTree, m: Sequence[int]) -> Tree:
    if t is None:
        return singleton(m)
    if not m:
        return LEAF
    x, rest = m[0], m[1:]
    # the five cases: keep below x, insert above x, and a fresh edge at x
    # built from the quotient at x
    entries = {}
    for e, child in t.items():
        if e < x:
            entries[e] = child
        elif e > x:
            entries[e] = _insert(child, rest)
    entries[x] = _insert(tree_quo(t, x), rest)
    labels, children = [], []
    for e in sorted(entries):
        child = entries[e]
        # the children form an inclusion chain, so a subtree equal to an
        # earlier one is equal to its immediate predecessor
        if children and children[-1] == child:
            continue
        labels.append(e)
        children.append(child)
    return Branch(tuple(labels), tuple(children))


def build_tree(gens: Iterable[Monomial]) -> MaybeTree:
    t: MaybeTree = None
    for g in gens:
        t = tree_insert(t, g)
    return t


def tree_set(t: Tree) -> list[Monomial]:
    """All root-to-leaf label paths."""
    if isinstance(t, Leaf):
        return [()]
    return [(e,) + rest for e, child in t.items() for rest in tree_set(child)]


def ideal_includes(a: Tree, b: Tree) -> bool:
    """True iff ``ideal(b)`` is contained in ``ideal(a)``."""
    if a.depth != b.depth:
        raise DimensionError("trees of different depth")
    return all(tree_contains(a, m) for m in tree_set(b))


def tree_node_count(t: Tree) -> int:
    if isinstance(t, Leaf):
        return 1
    return 1 + sum(tree_node_count(c) for c in t.children)


def tree_words(t: Tree) -> int:
    """Sequential size: one word per node plus two per edge."""
    if isinstance(t, Leaf):
        return 1
    return 1 + 2 * len(t.labels) + sum(tree_words(c) for c in t.children)
