"""Partial-BCPC computation on the enumeration tree, then reduced traversal.

A partial-BCPC is a set of maximal bicliques known to sit in one community.
Two ways of building them are provided:

* ``compute_partial_basic`` merges, for every real (α,β)-node, the maximal
  bicliques found in its subtree.
* ``compute_partial_plus`` runs a postorder interleaved with the
  enumeration.  Each (α,β)-node (real or virtual) triggers a search from
  the root for every biclique sharing its ``(R_U, R_V)``, using stop-labels
  to avoid re-descending into subtrees that were already merged.

Either result seeds ``traverse_reduced_mbag``, which only tests adjacency
between bicliques that are not yet in the same set.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .bigraph import BipartiteGraph
from .mbag import CommunityResult, RunStats, traverse_pairs
from .mbe import MbeNode, MbeTree, enumerate_maximal_bicliques, filter_by_size
from .unionfind import DisjointSets


class TreeInvariantError(RuntimeError):
    pass


@dataclass
class PartialBcpcState:
    tree: MbeTree
    alpha: int
    beta: int
    uf: DisjointSets
    filtered: list[int]
    pending: list[int] = field(default_factory=list)
    kind: str = "basic"
    search_nodes: int = 0

    @property
    def n_partial(self) -> int:
        """Number of partial-BCPCs among the size-filtered bicliques."""
        return self.uf.count_among(self.filtered)

    def groups(self) -> list[list[int]]:
        return self.uf.groups(self.filtered)

    def _flush(self, node: MbeNode | None = None) -> None:
        P = self.pending
        if not P:
            return
        head = P[0]
        for b in P[1:]:
            self.uf.union(b, head)
        if node is not None:
            node.stop_label = head
        P.clear()


def _require_tree(tree: MbeTree, alpha: int, beta: int):
    if tree.root is None:
        raise ValueError("partial-BCPC computation needs a retained tree")
    if tree.ab != (alpha, beta):
        raise ValueError(f"tree was built for (alpha, beta)={tree.ab}, not {(alpha, beta)}")


def compute_partial_basic(tree: MbeTree, alpha: int, beta: int) -> PartialBcpcState:
    """Merge the maximal bicliques below every real (α,β)-node."""
    _require_tree(tree, alpha, beta)
    state = PartialBcpcState(tree, alpha, beta, DisjointSets(len(tree.bicliques)),
                             filter_by_size(tree, alpha, beta), kind="basic")

    def gather(node: MbeNode):
        for _, child in node.children:
            state.search_nodes += 1
            if not (child.c_u | child.c_v):
                if child.biclique_id is not None:
                    state.pending.append(child.biclique_id)
            else:
                gather(child)

    for nd in tree.iter_nodes():
        if nd.is_ab_node and nd.real:
            gather(nd)
            state._flush()
    return state


def process_node_plus_subtree(node: MbeNode) -> list[int]:
    """Labels standing for the whole subtree of a real (α,β)-descendant.

    A leaf stands for itself; otherwise every real child must already carry
    a stop-label (guaranteed by the postorder).
    """
    if node.biclique_id is not None:
        return [node.biclique_id]
    out = []
    for _, child in node.children:
        if child.stop_label is None:
            raise TreeInvariantError(f"real child without stop-label: {child!r}")
        out.append(child.stop_label)
    return out


class _Postorder:
    def __init__(self, state: PartialBcpcState, n_u: int):
        self.state = state
        self.n_u = n_u

    def search(self, node: MbeNode, uv: int, ruv: int) -> None:
        state = self.state
        for edge, child in node.children:
            state.search_nodes += 1
            if child.real and uv >> edge & 1:
                if child.stop_label is None:
                    self.search(child, uv, ruv)
                else:
                    state.pending.append(child.stop_label)
            # later siblings exclude `edge`, so they cannot contain R(nd)
            if ruv >> edge & 1:
                break

    def __call__(self, node: MbeNode, tree: MbeTree) -> None:
        state = self.state
        if node.is_ab_node:
            self.search(tree.root, node.rcx(self.n_u), node.r_combined(self.n_u))
            if node.biclique_id is not None:
                # an (α,β)-node that is itself a maximal biclique
                state.pending.append(node.biclique_id)
        elif node.real and node.under_ab:
            state.pending.extend(process_node_plus_subtree(node))
        state._flush(node)


def compute_partial_plus(g: BipartiteGraph, alpha: int, beta: int, *,
                         order=None) -> PartialBcpcState:
    """Enumerate maximal bicliques with the stop-label postorder interleaved."""
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be >= 1")
    state = PartialBcpcState(None, alpha, beta, DisjointSets(0), [], kind="plus")
    hook = _Postorder(state, g.n_u)
    # the union-find must grow as bicliques are emitted
    uf = _GrowingSets()
    state.uf = uf
    tree = enumerate_maximal_bicliques(g, retain_tree=True, ab=(alpha, beta),
                                       order=order, on_finish=hook)
    uf.grow(len(tree.bicliques))
    state.tree = tree
    state.filtered = filter_by_size(tree, alpha, beta)
    return state


class _GrowingSets(DisjointSets):
    """Union-find whose element range extends on demand."""

    __slots__ = ()

    def grow(self, n: int) -> None:
        k = len(self.parent)
        if n > k:
            self.parent.extend(range(k, n))
            self.rank.extend([0] * (n - k))
            self.count += n - k

    def find(self, i: int) -> int:
        if i >= len(self.parent):
            self.grow(i + 1)
        return super().find(i)


def traverse_reduced_mbag(tree: MbeTree, alpha: int, beta: int,
                          state: PartialBcpcState, *, seed: int | None = None,
                          stats: RunStats | None = None) -> CommunityResult:
    """Finish the partial-BCPCs into BCPCs by testing only cross-set pairs."""
    if (state.alpha, state.beta) != (alpha, beta) or state.tree is not tree:
        raise ValueError("partial-BCPC state does not match this tree / parameters")
    stats = stats or RunStats()
    uf = state.uf.copy()
    traverse_pairs(tree, state.filtered, uf, alpha, beta, stats, seed)
    return CommunityResult.from_uf(alpha, beta, tree, state.filtered, uf, stats)


def detect_pbcpc(g: BipartiteGraph, alpha: int, beta: int, *,
                 seed: int | None = None) -> CommunityResult:
    t0 = time.perf_counter()
    tree = enumerate_maximal_bicliques(g, retain_tree=True, ab=(alpha, beta))
    state = compute_partial_basic(tree, alpha, beta)
    stats = RunStats(pbcpc=state.n_partial, mbe_nodes=tree.nodes_visited,
                     tree_nodes=tree.nodes_visited, search_nodes=state.search_nodes)
    res = traverse_reduced_mbag(tree, alpha, beta, state, seed=seed, stats=stats)
    stats.wall_ms = (time.perf_counter() - t0) * 1e3
    return res


def detect_pbcpc_plus(g: BipartiteGraph, alpha: int, beta: int, *,
                      seed: int | None = None) -> CommunityResult:
    t0 = time.perf_counter()
    state = compute_partial_plus(g, alpha, beta)
    tree = state.tree
    stats = RunStats(pbcpc_plus=state.n_partial, mbe_nodes=tree.nodes_visited,
                     tree_nodes=tree.nodes_visited, search_nodes=state.search_nodes)
    res = traverse_reduced_mbag(tree, alpha, beta, state, seed=seed, stats=stats)
    stats.wall_ms = (time.perf_counter() - t0) * 1e3
    return res
