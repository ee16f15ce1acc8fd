"""Maximal biclique enumeration over a set-enumeration tree.

The search follows the classic (R, C, X) scheme on both sides: ``R`` holds
the chosen vertices, ``C`` the candidates that may still extend ``R`` and
``X`` the vertices already explored in an earlier sibling branch.  A leaf
(no candidates left) with empty exclusion sets is a maximal biclique.

The first level branches on U-vertices in 2-hop-degree order; deeper
levels use pivoting: only the pivot itself (when it is a candidate) and the
opposite-side candidates it is *not* adjacent to are branched on.

All vertex sets are Python ints used as bitsets.  Inside the tree, edge
labels and the ``UV``/``RUV`` lookups of the partial-BCPC search use one
combined id space: U-vertex ``u`` is ``u`` and V-vertex ``v`` is ``n_u + v``.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .bigraph import BipartiteGraph, Side, VertexId, two_hop_order


def bits(m: int) -> Iterator[int]:
    """Indices of the set bits of ``m``, ascending."""
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def to_mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True, order=True)
class Biclique:
    X: tuple[int, ...]
    Y: tuple[int, ...]

    def __str__(self):
        return f"{','.join(map(str, self.X))} | {','.join(map(str, self.Y))}"

    def is_complete_in(self, g: BipartiteGraph) -> bool:
        ym = to_mask(self.Y)
        return all(g.mask_u[x] & ym == ym for x in self.X)


class MbeNode:
    """One retained node of the enumeration tree.

    The six sets are stored as they were when the node was entered.  Only
    nodes lying on a path to a maximal-biclique leaf ("real" nodes) are kept
    in a retained tree.
    """

    __slots__ = ("r_u", "r_v", "c_u", "c_v", "x_u", "x_v", "parent", "children",
                 "stop_label", "is_ab_node", "under_ab", "biclique_id", "real")

    def __init__(self, r_u, r_v, c_u, c_v, x_u, x_v, parent=None):
        self.r_u, self.r_v = r_u, r_v
        self.c_u, self.c_v = c_u, c_v
        self.x_u, self.x_v = x_u, x_v
        self.parent = parent
        self.children: list[tuple[int, MbeNode]] = []
        self.stop_label: int | None = None
        self.is_ab_node = False
        self.under_ab = False
        self.biclique_id: int | None = None
        self.real = False

    @property
    def is_leaf(self) -> bool:
        return not (self.c_u | self.c_v)

    def rcx(self, n_u: int) -> int:
        """``RCX_U ∪ RCX_V`` in the combined id space."""
        return (self.r_u | self.c_u | self.x_u) | ((self.r_v | self.c_v | self.x_v) << n_u)

    def r_combined(self, n_u: int) -> int:
        return self.r_u | (self.r_v << n_u)

    def __repr__(self):
        return (f"MbeNode(R_U={list(bits(self.r_u))}, R_V={list(bits(self.r_v))}, "
                f"ab={self.is_ab_node}, bid={self.biclique_id}, st={self.stop_label})")


@dataclass
class MbeTree:
    graph: BipartiteGraph
    root: MbeNode | None
    bicliques: list[Biclique]
    index_u: list[list[int]]
    index_v: list[list[int]]
    nodes_visited: int = 0
    ab: tuple[int, int] | None = None

    def containing(self, x: VertexId) -> list[int]:
        """Sorted ids of the bicliques containing vertex ``x``."""
        side, i = x
        return (self.index_u if side is Side.U else self.index_v)[i]

    def iter_nodes(self) -> Iterator[MbeNode]:
        """Pre-order walk over the retained nodes (children in creation order)."""
        if self.root is None:
            return
        stack = [self.root]
        while stack:
            nd = stack.pop()
            yield nd
            stack.extend(ch for _, ch in reversed(nd.children))


def select_pivot(c_u: int, c_v: int, x_u: int, x_v: int, g: BipartiteGraph
                 ) -> tuple[VertexId, list[VertexId]]:
    """Pick the vertex of ``X ∪ C`` (either side) with the fewest non-neighbours
    among the opposite-side candidates; ties go to side U, then lowest index.

    Returns the pivot and the branch sequence: the pivot itself when it is a
    candidate, followed by the opposite-side candidates it is not adjacent to.
    """
    if not (c_u | c_v):
        raise ValueError("pivot selection needs a non-empty candidate set")
    best = None
    for x in bits(x_u | c_u):
        key = ((c_v & ~g.mask_u[x]).bit_count(), 0, x)
        if best is None or key < best:
            best = key
    for y in bits(x_v | c_v):
        key = ((c_u & ~g.mask_v[y]).bit_count(), 1, y)
        if best is None or key < best:
            best = key
    _, side, p = best
    if side == 0:
        seq = [VertexId(Side.U, p)] if c_u >> p & 1 else []
        seq += [VertexId(Side.V, v) for v in bits(c_v & ~g.mask_u[p])]
        return VertexId(Side.U, p), seq
    seq = [VertexId(Side.V, p)] if c_v >> p & 1 else []
    seq += [VertexId(Side.U, u) for u in bits(c_u & ~g.mask_v[p])]
    return VertexId(Side.V, p), seq


class _Run:
    def __init__(self, g, retain, ab, pivot, order, on_finish):
        self.g = g
        self.n_u = g.n_u
        self.retain = retain or on_finish is not None
        self.ab = ab
        self.pivot = pivot
        self.order = order
        self.on_finish = on_finish
        self.bicliques: list[Biclique] = []
        self.index_u: list[list[int]] = [[] for _ in range(g.n_u)]
        self.index_v: list[list[int]] = [[] for _ in range(g.n_v)]
        self.visited = 0
        self.tree: MbeTree | None = None

    def _branch_seq(self, c_u, c_v, x_u, x_v) -> list[int]:
        n_u = self.n_u
        if self.pivot:
            _, seq = select_pivot(c_u, c_v, x_u, x_v, self.g)
            return [w.index if w.side is Side.U else n_u + w.index for w in seq]
        return list(bits(c_u)) + [n_u + v for v in bits(c_v)]

    def _emit(self, r_u, r_v) -> int:
        bid = len(self.bicliques)
        X, Y = tuple(bits(r_u)), tuple(bits(r_v))
        self.bicliques.append(Biclique(X, Y))
        for u in X:
            self.index_u[u].append(bid)
        for v in Y:
            self.index_v[v].append(bid)
        return bid

    def _reached(self, r_u, r_v) -> bool:
        a, b = self.ab
        return r_u.bit_count() >= a and r_v.bit_count() >= b

    def visit(self, node: MbeNode | None, r_u, r_v, c_u, c_v, x_u, x_v, reached: bool):
        self.visited += 1
        if not (c_u | c_v):
            if not (x_u | x_v):
                bid = self._emit(r_u, r_v)
                if node is not None:
                    node.biclique_id = bid
                    nd = node
                    while nd is not None and not nd.real:
                        nd.real = True
                        nd = nd.parent
            self._finish(node)
            return
        g, n_u = self.g, self.n_u
        for w in self._branch_seq(c_u, c_v, x_u, x_v):
            if w < n_u:
                bit = 1 << w
                c_u &= ~bit
                nb = g.mask_u[w]
                ch = (r_u | bit, r_v, c_u, c_v & nb, x_u, x_v & nb)
                if r_v or ch[3]:
                    self._child(node, w, ch, reached)
                x_u |= bit
            else:
                bit = 1 << (w - n_u)
                c_v &= ~bit
                nb = g.mask_v[w - n_u]
                ch = (r_u, r_v | bit, c_u & nb, c_v, x_u & nb, x_v)
                if r_u or ch[2]:
                    self._child(node, w, ch, reached)
                x_v |= bit
        self._finish(node)

    def _child(self, parent, edge, sets, reached):
        child = None
        now = reached or (self.ab is not None and self._reached(sets[0], sets[1]))
        if parent is not None:
            child = MbeNode(*sets, parent=parent)
            child.is_ab_node = now and not reached
            child.under_ab = parent.is_ab_node or parent.under_ab
            parent.children.append((edge, child))
        self.visit(child, *sets, now)

    def _finish(self, node):
        if node is None:
            return
        if self.on_finish is not None:
            self.on_finish(node, self.tree)
        parent = node.parent
        if parent is not None and not node.real:
            # virtual nodes are not retained; node is the newest child
            parent.children.pop()

    def run(self) -> MbeTree:
        g, n_u = self.g, self.n_u
        root = MbeNode(0, 0, (1 << n_u) - 1, (1 << g.n_v) - 1, 0, 0) if self.retain else None
        self.tree = MbeTree(g, root, self.bicliques, self.index_u, self.index_v, ab=self.ab)
        order = two_hop_order(g) if self.order is None else list(self.order)
        if sorted(order) != list(range(n_u)):
            raise ValueError("vertex order must be a permutation of the U indices")
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 4 * (n_u + g.n_v) + 1000))
        try:
            self.visited += 1
            if self.pivot:
                self._root_ordered(root, order)
            else:
                self._root_plain(root, order)
            self._finish(root)
        finally:
            sys.setrecursionlimit(limit)
        self.tree.nodes_visited = self.visited
        return self.tree

    def _root_ordered(self, root, order):
        # First level: every non-isolated U-vertex in the given order.  Other
        # U-vertices can only join through a shared neighbour, so the child's
        # C_U / X_U are restricted to the 2-hop neighbourhood.
        g = self.g
        seen = 0
        for u in order:
            bit = 1 << u
            nb = g.mask_u[u]
            if nb:
                hop = 0
                for v in bits(nb):
                    hop |= g.mask_v[v]
                hop &= ~bit
                self._child(root, u, (bit, 0, hop & ~seen, nb, hop & seen, 0), False)
            seen |= bit

    def _root_plain(self, root, order):
        # Unpivoted framework: branch on all of U (in order), then all of V.
        g, n_u = self.g, self.n_u
        c_u, c_v, x_u, x_v = (1 << n_u) - 1, (1 << g.n_v) - 1, 0, 0
        for u in order:
            bit = 1 << u
            c_u &= ~bit
            nb = g.mask_u[u]
            if nb & c_v:
                self._child(root, u, (bit, 0, c_u, c_v & nb, x_u, x_v & nb), False)
            x_u |= bit
        for v in range(g.n_v):
            bit = 1 << v
            c_v &= ~bit
            nb = g.mask_v[v]
            if nb & c_u:
                self._child(root, n_u + v, (0, bit, c_u & nb, c_v, x_u & nb, x_v), False)
            x_v |= bit


def enumerate_maximal_bicliques(
    g: BipartiteGraph,
    retain_tree: bool = False,
    ab: tuple[int, int] | None = None,
    *,
    pivot: bool = True,
    order: Sequence[int] | None = None,
    on_finish: Callable[[MbeNode, MbeTree], None] | None = None,
) -> MbeTree:
    """Enumerate every maximal biclique (both sides non-empty) exactly once.

    With ``retain_tree`` the real-node skeleton is kept and, when ``ab`` is
    given, each node carries its (α,β)-node flag.  ``on_finish`` is called on
    every node (real or virtual) after its subtree has been explored, which
    is how the stop-label postorder runs interleaved with the enumeration.
    ``pivot=False`` runs the unpruned framework (for cross-checking);
    ``order`` overrides the first-level vertex order.
    """
    if ab is not None and (ab[0] < 1 or ab[1] < 1):
        raise ValueError("alpha and beta must be >= 1")
    return _Run(g, retain_tree, ab, pivot, order, on_finish).run()


def filter_by_size(tree: MbeTree, alpha: int, beta: int) -> list[int]:
    """Ids of bicliques with ``|X| >= alpha`` and ``|Y| >= beta``, ascending."""
    return [i for i, b in enumerate(tree.bicliques) if len(b.X) >= alpha and len(b.Y) >= beta]
