"""Monomial divisibility diagrams.

A :class:`DiagramStore` is an append-only arena of hash-consed nodes.  A
node is identified by a dense integer id; two ids are equal exactly when
the nodes are structurally equal, so equality, hashing and memo lookups
are integer operations.  Id 0 is the leaf.  The empty ideal is ``None``.

All nodes of a store have a fixed depth (distance to the leaf), and the
diagram of an ideal in ``N^n`` is rooted at a node of depth ``n``.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .monomial import DimensionError, Monomial

LEAF = 0

NodeId = int
Edge = tuple[int, NodeId]


@dataclass
class DiagramMetrics:
    nodes: int
    edges: int
    width: int
    branching_degree: int
    tree_nodes: int

    @property
    def seq_words(self) -> int:
        return self.nodes + 2 * self.edges

    @property
    def tree_words(self) -> int:
        # every tree node but the root hangs off exactly one edge
        return 3 * self.tree_nodes - 2


class EmptyDiagramError(ValueError):
    """Operation needs a nonempty ideal."""


def dedup(edges: Iterable[Edge]) -> list[Edge]:
    """Drop every edge pointing to the same node as the previous edge."""
    out: list[Edge] = []
    prev = None
    for label, to in edges:
        if to != prev:
            out.append((label, to))
            prev = to
    return out


class DiagramStore:
    """Hash-consing arena for the diagrams of one ambient dimension.

    ``linear_below``: nodes with fewer edges than this are searched by a
    linear scan instead of bisection during membership tests.
    """

    def __init__(self, dim: int, linear_below: int = 0):
        if dim < 1:
            raise ValueError("dimension must be at least 1")
        self.dim = dim
        self.linear_below = linear_below
        self._labels: list[tuple[int, ...]] = [()]
        self._targets: list[tuple[NodeId, ...]] = [()]
        self._depth: list[int] = [0]
        self._universe: dict[tuple, NodeId] = {((), ()): LEAF}
        # instrumentation
        self.queries = 0
        self.searches = 0
        self.lookups = 0
        self.hits = 0

    def __len__(self) -> int:
        return len(self._labels)

    # -- nodes ---------------------------------------------------------

    def edges(self, node: NodeId) -> list[Edge]:
        return list(zip(self._labels[node], self._targets[node]))

    def depth(self, node: NodeId) -> int:
        return self._depth[node]

    def _intern(self, labels: tuple[int, ...], targets: tuple[NodeId, ...]) -> NodeId:
        key = (labels, targets)
        self.lookups += 1
        node = self._universe.get(key)
        if node is not None:
            self.hits += 1
            return node
        node = len(self._labels)
        self._labels.append(labels)
        self._targets.append(targets)
        self._depth.append(self._depth[targets[0]] + 1)
        self._universe[key] = node
        return node

    def make_node(self, edges: Sequence[Edge]) -> NodeId:
        """Return the unique node with these edges, allocating if needed.

        The caller is responsible for the inclusion chain between the
        children; only the local invariants are checked here.
        """
        if not edges:
            raise ValueError("only the leaf has no edges")
        labels = tuple(int(e) for e, _ in edges)
        targets = tuple(t for _, t in edges)
        if any(e < 0 for e in labels):
            raise ValueError("labels must be nonnegative")
        if any(a >= b for a, b in zip(labels, labels[1:])):
            raise ValueError("labels must be strictly increasing")
        if any(t < 0 or t >= len(self._labels) for t in targets):
            raise ValueError("edge target is not a node of this store")
        if len({self._depth[t] for t in targets}) != 1:
            raise ValueError("edge targets have different depths")
        if self._depth[targets[0]] >= self.dim:
            raise ValueError("node would be deeper than the store dimension")
        if any(a == b for a, b in zip(targets, targets[1:])):
            raise ValueError("consecutive edges point to the same node")
        return self._intern(labels, targets)

    def singleton(self, m: Monomial) -> NodeId:
        self._check(m)
        return self._singleton(m, 0)

    def _singleton(self, m: Sequence[int], i: int) -> NodeId:
        node = LEAF
        for e in reversed(m[i:]):
            node = self._intern((e,), (node,))
        return node

    def _check(self, m: Sequence[int]) -> None:
        if len(m) != self.dim:
            raise DimensionError(f"monomial of dimension {len(m)} in a store of dimension {self.dim}")

    def _check_root(self, root: Optional[NodeId]) -> None:
        if root is not None and self._depth[root] != self.dim:
            raise ValueError(f"node {root} is not a root (depth {self._depth[root]})")

    # -- membership and insertion ---------------------------------------

    def contains(self, root: Optional[NodeId], m: Monomial) -> bool:
        """True iff ``m`` lies in the ideal rooted at ``root``."""
        if len(m) != self.dim:
            self._check(m)
        self.queries += 1
        if root is None:
            return False
        found, steps = self._descend(root, m)
        self.searches += steps
        return found

    def _descend(self, node: NodeId, m: Monomial) -> tuple[bool, int]:
        labels, targets = self._labels, self._targets
        lin = self.linear_below
        steps = 0
        for e in m:
            ls = labels[node]
            steps += 1
            if len(ls) < lin:
                j = 0
                for lab in ls:
                    if lab > e:
                        break
                    j += 1
            else:
                j = bisect_right(ls, e)
            if j == 0:
                return False, steps
            node = targets[node][j - 1]
        return True, steps

    def _contains_from(self, node: NodeId, m: Monomial, i: int) -> bool:
        labels, targets = self._labels, self._targets
        for j in range(i, len(m)):
            k = bisect_right(labels[node], m[j])
            if not k:
                return False
            node = targets[node][k - 1]
        return True

    def insert(self, root: Optional[NodeId], m: Monomial) -> NodeId:
        """Root of the diagram of ``ideal(root) + <m>``."""
        self._check(m)
        self._check_root(root)
        if root is None:
            return self._singleton(m, 0)
        if self._descend(root, m)[0]:
            return root
        # a node id fixes its depth, so one memo serves every level
        return self._insert(root, m, 0, {})

    def _insert(self, node: Optional[NodeId], m: Monomial, i: int, memo: dict) -> NodeId:
        if node is None:
            return self._singleton(m, i)
        if i == len(m):
            return node
        hit = memo.get(node)
        if hit is not None:
            return hit
        if self._contains_from(node, m, i):
            memo[node] = node
            return node
        labels = self._labels[node]
        targets = self._targets[node]
        x = m[i]
        k = bisect_left(labels, x)
        out_labels = list(labels[:k])
        out_targets = list(targets[:k])
        prev = out_targets[-1] if k else None
        # edges below x are untouched; the rest absorb the suffix of m,
        # merging any child equal to its left neighbour
        if k == len(labels) or labels[k] != x:
            t = self._insert(prev, m, i + 1, memo)
            if t != prev:
                out_labels.append(x)
                out_targets.append(t)
                prev = t
        for j in range(k, len(labels)):
            t = self._insert(targets[j], m, i + 1, memo)
            if t != prev:
                out_labels.append(labels[j])
                out_targets.append(t)
                prev = t
        res = self._intern(tuple(out_labels), tuple(out_targets))
        memo[node] = res
        return res

    def build(self, gens: Iterable[Monomial], root: Optional[NodeId] = None) -> Optional[NodeId]:
        for g in gens:
            root = self.insert(root, g)
        return root

    # -- traversal -----------------------------------------------------

    def reachable(self, root: NodeId) -> list[NodeId]:
        """Nodes below ``root``, children before parents."""
        order: list[NodeId] = []
        seen = set()
        stack = [(root, False)]
        while stack:
            node, done = stack.pop()
            if done:
                order.append(node)
                continue
            if node in seen:
                continue
            seen.add(node)
            stack.append((node, True))
            for t in reversed(self._targets[node]):
                if t not in seen:
                    stack.append((t, False))
        return order

    def _require(self, root: Optional[NodeId]) -> NodeId:
        if root is None:
            raise EmptyDiagramError("the empty ideal has no diagram")
        if not 0 <= root < len(self._labels):
            raise ValueError(f"unknown node {root}")
        return root

    def tree_size(self, root: NodeId) -> int:
        """Node count of the unshared ideal tree."""
        size: dict[NodeId, int] = {}
        for node in self.reachable(root):
            size[node] = 1 + sum(size[t] for t in self._targets[node])
        return size[root]

    def metrics(self, root: Optional[NodeId]) -> DiagramMetrics:
        root = self._require(root)
        nodes = self.reachable(root)
        per_depth: dict[int, int] = {}
        edges = 0
        branching = 0
        for node in nodes:
            d = self._depth[node]
            per_depth[d] = per_depth.get(d, 0) + 1
            out = len(self._labels[node])
            edges += out
            branching = max(branching, out)
        return DiagramMetrics(
            nodes=len(nodes),
            edges=edges,
            width=max(per_depth.values()),
            branching_degree=branching,
            tree_nodes=self.tree_size(root),
        )

    def enumerate_basis(self, root: Optional[NodeId]) -> list[Monomial]:
        """All root-to-leaf label paths (the Janet-like basis)."""
        root = self._require(root)
        paths: dict[NodeId, list[Monomial]] = {LEAF: [()]}
        for node in self.reachable(root):
            if node == LEAF:
                continue
            paths[node] = [
                (e,) + p
                for e, t in zip(self._labels[node], self._targets[node])
                for p in paths[t]
            ]
        return paths[root]

    def minimal_generators(self, root: Optional[NodeId]) -> list[Monomial]:
        """The minimal generating set of the ideal.

        A basis element is minimal iff no ``m / x_i`` is in the ideal.
        """
        return [m for m in self.enumerate_basis(root) if self.is_minimal(root, m)]

    def is_minimal(self, root: Optional[NodeId], m: Monomial) -> bool:
        """True iff ``m`` is a minimal generator of the ideal."""
        if not self.contains(root, m):
            return False
        for i, e in enumerate(m):
            if e and self.contains(root, m[:i] + (e - 1,) + m[i + 1 :]):
                return False
        return True

    def to_dot(self, root: Optional[NodeId], name: str = "mdd") -> str:
        root = self._require(root)
        nodes = sorted(self.reachable(root))
        lines = [f"digraph {name} {{", "  rankdir=TB;"]
        for node in nodes:
            if node == LEAF:
                lines.append(f'  n{node} [shape=box, label="⊥"];')
            else:
                lines.append(f'  n{node} [shape=circle, label="{node}"];')
        for node in nodes:
            for e, t in zip(self._labels[node], self._targets[node]):
                lines.append(f'  n{node} -> n{t} [label="{e}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def sequential_form(self, root: Optional[NodeId]) -> list[list[int]]:
        """Word sequences ``r, a1, p1, ..., ar, pr`` per node.

        Nodes are listed children first, and ``p_i`` is the position of
        the target in that list, so the leaf is entry 0 and the root last.
        """
        root = self._require(root)
        order = self.reachable(root)
        index = {node: i for i, node in enumerate(order)}
        rows = []
        for node in order:
            row = [len(self._labels[node])]
            for e, t in zip(self._labels[node], self._targets[node]):
                row += [e, index[t]]
            rows.append(row)
        return rows

    # -- maintenance ---------------------------------------------------

    def duplicate_count(self) -> int:
        """Number of arena entries whose edge list occurs earlier too."""
        seen = set()
        dups = 0
        for key in zip(self._labels, self._targets):
            if key in seen:
                dups += 1
            seen.add(key)
        return dups

    def consistent(self) -> bool:
        return len(self._universe) == len(self._labels) and all(
            self._universe[(ls, ts)] == i
            for i, (ls, ts) in enumerate(zip(self._labels, self._targets))
        )

    def compact(self, roots: Sequence[Optional[NodeId]]) -> tuple[DiagramStore, list[Optional[NodeId]]]:
        """Copy the live part of the store into a fresh one."""
        new = DiagramStore(self.dim, self.linear_below)
        remap = {LEAF: LEAF}
        new_roots = []
        for root in roots:
            if root is None:
                new_roots.append(None)
                continue
            for node in self.reachable(root):
                if node not in remap:
                    remap[node] = new._intern(
                        self._labels[node], tuple(remap[t] for t in self._targets[node])
                    )
            new_roots.append(remap[root])
        return new, new_roots


@dataclass(frozen=True)
class DiagramHandle:
    """A diagram (root id, or ``None`` for the empty ideal) in a store."""

    store: DiagramStore
    root: Optional[NodeId] = None

    @classmethod
    def empty(cls, dim: int, **kw) -> DiagramHandle:
        return cls(DiagramStore(dim, **kw))

    @classmethod
    def from_generators(cls, dim: int, gens: Iterable[Monomial], store: DiagramStore | None = None) -> DiagramHandle:
        store = store or DiagramStore(dim)
        return cls(store, store.build(gens))

    @property
    def dim(self) -> int:
        return self.store.dim

    @property
    def is_empty(self) -> bool:
        return self.root is None

    def insert(self, m: Monomial) -> DiagramHandle:
        return DiagramHandle(self.store, self.store.insert(self.root, m))

    def __contains__(self, m: Monomial) -> bool:
        return self.store.contains(self.root, m)

    def contains(self, m: Monomial) -> bool:
        return self.store.contains(self.root, m)

    def metrics(self) -> DiagramMetrics:
        return self.store.metrics(self.root)

    def basis(self) -> list[Monomial]:
        return self.store.enumerate_basis(self.root)

    def minimal_generators(self) -> list[Monomial]:
        return self.store.minimal_generators(self.root)

    def to_dot(self) -> str:
        return self.store.to_dot(self.root)
