"""Baseline BCPC detection over the maximal biclique adjacency graph.

The adjacency graph is never materialised: the neighbours of a biclique
are found on demand through the per-vertex inverted index of the
enumeration result, and connectivity is kept in a union-find.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from typing import Iterable

from .bigraph import BipartiteGraph
from .mbe import Biclique, MbeTree, enumerate_maximal_bicliques, filter_by_size
from .unionfind import DisjointSets


@dataclass
class RunStats:
    n_biclique: int = 0
    filtered: int = 0
    pbcpc: int | None = None
    pbcpc_plus: int | None = None
    bcpc: int = 0
    tree_nodes: int = 0
    mbe_nodes: int = 0
    search_nodes: int = 0
    adjacency_tests: int = 0
    unions: int = 0
    ab_emitted: int = 0
    wall_ms: float = 0.0

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass
class CommunityResult:
    """Filtered maximal bicliques and their community assignment.

    ``assignment`` is a union-find over positions ``0 .. len(filtered_ids)-1``;
    position ``k`` stands for biclique ``filtered_ids[k]`` of ``tree``.
    """

    alpha: int
    beta: int
    tree: MbeTree
    filtered_ids: list[int]
    assignment: DisjointSets
    stats: RunStats = field(default_factory=RunStats)

    @classmethod
    def from_uf(cls, alpha, beta, tree, filtered, uf: DisjointSets, stats: RunStats):
        pos = {b: k for k, b in enumerate(filtered)}
        first: dict[int, int] = {}
        ds = DisjointSets(len(filtered))
        for b in filtered:
            r = uf.find(b)
            if r in first:
                ds.union(first[r], pos[b])
            else:
                first[r] = pos[b]
        stats.n_biclique = len(tree.bicliques)
        stats.filtered = len(filtered)
        stats.bcpc = ds.count
        return cls(alpha, beta, tree, list(filtered), ds, stats)

    def communities(self) -> list[list[Biclique]]:
        """Communities as sorted biclique lists, ordered by smallest member."""
        bs = self.tree.bicliques
        groups = [sorted(bs[self.filtered_ids[k]] for k in grp)
                  for grp in self.assignment.groups()]
        return sorted(groups)

    def id_groups(self) -> list[list[int]]:
        return [[self.filtered_ids[k] for k in grp] for grp in self.assignment.groups()]


def adjacent(a: Biclique, b: Biclique, alpha: int, beta: int) -> bool:
    """True iff ``|X_a ∩ X_b| >= alpha`` and ``|Y_a ∩ Y_b| >= beta``."""
    return (_meets(a.X, b.X, alpha) and _meets(a.Y, b.Y, beta))


def _meets(s: tuple[int, ...], t: tuple[int, ...], need: int) -> bool:
    # sorted merge; stop once `need` common elements are seen or cannot be
    i = j = hit = 0
    ns, nt = len(s), len(t)
    while i < ns and j < nt:
        if min(ns - i, nt - j) + hit < need:
            return False
        a, b = s[i], t[j]
        if a == b:
            hit += 1
            if hit >= need:
                return True
            i += 1
            j += 1
        elif a < b:
            i += 1
        else:
            j += 1
    return hit >= need


class _Candidates:
    """Dedup of inverted-index hits with a stamp array, reused across calls."""

    def __init__(self, tree: MbeTree, filtered: Iterable[int]):
        n = len(tree.bicliques)
        self.tree = tree
        self.keep = bytearray(n)
        for b in filtered:
            self.keep[b] = 1
        self.stamp = [-1] * n

    def __call__(self, b: int) -> list[int]:
        tree, keep, stamp = self.tree, self.keep, self.stamp
        stamp[b] = b
        out = []
        B = tree.bicliques[b]
        for lists, members in ((tree.index_u, B.X), (tree.index_v, B.Y)):
            for x in members:
                for c in lists[x]:
                    if keep[c] and stamp[c] != b:
                        stamp[c] = b
                        out.append(c)
        out.sort()
        return out


def neighbor_candidates(tree: MbeTree, b: int, filtered: Iterable[int]) -> list[int]:
    """Filtered ids other than ``b`` sharing at least one vertex with it, ascending."""
    filtered = list(filtered)
    if b not in filtered:
        raise ValueError(f"biclique {b} is not in the filtered set")
    return _Candidates(tree, filtered)(b)


def traverse_pairs(tree: MbeTree, filtered: list[int], uf: DisjointSets,
                   alpha: int, beta: int, stats: RunStats, seed: int | None = None) -> None:
    """Union every (alpha,beta)-adjacent pair of filtered bicliques.

    Each unordered pair is looked at once (from its smaller id); pairs that
    already share a union-find set are skipped without an intersection test.
    ``seed`` shuffles the visiting order (the partition must not depend on it).
    """
    cand = _Candidates(tree, filtered)
    bs = tree.bicliques
    order = list(filtered)
    rng = random.Random(seed) if seed is not None else None
    if rng:
        rng.shuffle(order)
    for b in order:
        nbrs = cand(b)
        if rng:
            rng.shuffle(nbrs)
        B = bs[b]
        for c in nbrs:
            if c <= b or uf.find(b) == uf.find(c):
                continue
            stats.adjacency_tests += 1
            if adjacent(B, bs[c], alpha, beta):
                uf.union(b, c)
                stats.unions += 1


def detect_mbag(g: BipartiteGraph, alpha: int, beta: int, *,
                tree: MbeTree | None = None, seed: int | None = None) -> CommunityResult:
    """BCPCs by enumerating maximal bicliques and walking their adjacency graph."""
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be >= 1")
    t0 = time.perf_counter()
    stats = RunStats()
    if tree is None:
        tree = enumerate_maximal_bicliques(g)
    stats.mbe_nodes = stats.tree_nodes = tree.nodes_visited
    filtered = filter_by_size(tree, alpha, beta)
    uf = DisjointSets(len(tree.bicliques))
    traverse_pairs(tree, filtered, uf, alpha, beta, stats, seed)
    stats.wall_ms = (time.perf_counter() - t0) * 1e3
    return CommunityResult.from_uf(alpha, beta, tree, filtered, uf, stats)
