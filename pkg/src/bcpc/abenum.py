"""(α,β)-biclique listing and the three listing-based BCPC detectors.

U-side combinations are grown along a 2-hop graph (an edge ``u -> w`` for
``u < w`` sharing a V-neighbour) while the common V-neighbourhood is kept
as the candidate set; once ``α`` U-vertices are chosen every ``β``-subset
of the candidates is an (α,β)-biclique.

The detectors connect all size-filtered maximal bicliques that contain a
listed (α,β)-biclique.  The set ``RB`` of maximal bicliques containing the
current partial biclique is carried down the recursion as a bitset over
biclique ids; the pruned variants abandon a branch as soon as ``RB`` maps
to at most one union-find set.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations
from typing import Callable

from .bigraph import BipartiteGraph
from .mbag import CommunityResult, RunStats
from .mbe import MbeTree, bits, enumerate_maximal_bicliques, filter_by_size
from .pbcpc import PartialBcpcState, compute_partial_plus
from .unionfind import DisjointSets


@dataclass(frozen=True)
class TwoHopGraph:
    """Directed 2-hop graph on U; ``out_mask[u]`` has bit ``w`` iff ``u < w``
    and the two share a neighbour."""

    n: int
    out: tuple[tuple[int, ...], ...]
    out_mask: tuple[int, ...]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u in range(self.n) for w in self.out[u]]


@dataclass
class EnumStats:
    tree_nodes: int = 0
    ab_bicliques_emitted: int = 0
    unions_performed: int = 0


def build_two_hop(g: BipartiteGraph) -> TwoHopGraph:
    out, masks = [], []
    for u in range(g.n_u):
        reach = 0
        for v in g.adj_u[u]:
            reach |= g.mask_v[v]
        reach &= ~((1 << (u + 1)) - 1)
        masks.append(reach)
        out.append(tuple(bits(reach)))
    return TwoHopGraph(g.n_u, tuple(out), tuple(masks))


class _Lister:
    """One run of the listing recursion.

    mode ``plain`` only reports bicliques, ``basic`` unions every maximal
    biclique containing each listed one, ``pruned`` adds the RB test.
    """

    def __init__(self, g, alpha, beta, mode, sink=None, uf=None, tree=None,
                 filtered=(), check=False):
        self.g, self.alpha, self.beta, self.mode = g, alpha, beta, mode
        self.sink = sink
        self.uf = uf
        self.tree = tree
        self.check = check
        self.stats = EnumStats()
        self.H = build_two_hop(g)
        if mode != "plain":
            inv_u = [0] * g.n_u
            inv_v = [0] * g.n_v
            for b in filtered:
                B = tree.bicliques[b]
                bit = 1 << b
                for x in B.X:
                    inv_u[x] |= bit
                for y in B.Y:
                    inv_v[y] |= bit
            self.inv_u, self.inv_v = inv_u, inv_v
            self.all_rb = sum(1 << b for b in filtered)

    def run(self) -> EnumStats:
        g = self.g
        rb = self.all_rb if self.mode != "plain" else 0
        self.listing((1 << g.n_u) - 1, [], (1 << g.n_v) - 1, rb)
        return self.stats

    def _single_set(self, rb: int) -> bool:
        """True iff the bicliques in ``rb`` span at most one union-find set."""
        find = self.uf.find
        root = None
        for b in bits(rb):
            r = find(b)
            if root is None:
                root = r
            elif r != root:
                return False
        return True

    def _connect(self, rb: int, r_u, r_v) -> None:
        if self.check:
            self._verify_rb(rb, r_u, r_v)
        it = bits(rb)
        first = next(it, None)
        for b in it:
            if self.uf.union(first, b):
                self.stats.unions_performed += 1

    def _verify_rb(self, rb, r_u, r_v):
        want = 0
        bs = self.tree.bicliques
        for b in bits(self.all_rb):
            if set(r_u) <= set(bs[b].X) and set(r_v) <= set(bs[b].Y):
                want |= 1 << b
        if want != rb:
            raise AssertionError(f"RB mismatch for {(r_u, r_v)}")

    def listing(self, S: int, r_u: list[int], c_v: int, rb: int) -> None:
        st = self.stats
        st.tree_nodes += 1
        pruned = self.mode == "pruned"
        if pruned and self._single_set(rb):
            return
        alpha, beta = self.alpha, self.beta
        if len(r_u) == alpha:
            cands = list(bits(c_v))
            if self.mode == "plain":
                for r_v in combinations(cands, beta):
                    st.ab_bicliques_emitted += 1
                    if self.sink is not None:
                        self.sink(tuple(r_u), r_v)
            elif pruned:
                self._combos_pruned(cands, 0, [], rb, r_u)
            else:
                inv_v = self.inv_v
                for r_v in combinations(cands, beta):
                    st.ab_bicliques_emitted += 1
                    m = rb
                    for y in r_v:
                        m &= inv_v[y]
                    if m:
                        self._connect(m, r_u, r_v)
            return
        mask_u, out_mask = self.g.mask_u, self.H.out_mask
        need = alpha - len(r_u) - 1
        inv_u = self.inv_u if self.mode != "plain" else None
        for u in bits(S):
            cv = c_v & mask_u[u]
            if cv.bit_count() < beta:
                continue
            nxt = out_mask[u] & S
            if nxt.bit_count() < need:
                continue
            r_u.append(u)
            self.listing(nxt, r_u, cv, rb & inv_u[u] if inv_u is not None else 0)
            r_u.pop()

    def _combos_pruned(self, cands, start, r_v, rb, r_u):
        # β-subsets in lexicographic order; a prefix whose RB already spans
        # a single set cannot connect anything in any extension
        if len(r_v) == self.beta:
            self.stats.ab_bicliques_emitted += 1
            self._connect(rb, r_u, tuple(r_v))
            return
        inv_v = self.inv_v
        left = self.beta - len(r_v)
        for i in range(start, len(cands) - left + 1):
            m = rb & inv_v[cands[i]]
            if self._single_set(m):
                continue
            r_v.append(cands[i])
            self._combos_pruned(cands, i + 1, r_v, m, r_u)
            r_v.pop()


def enumerate_ab(g: BipartiteGraph, alpha: int, beta: int,
                 sink: Callable[[tuple[int, ...], tuple[int, ...]], None] | None = None
                 ) -> EnumStats:
    """List every (α,β)-biclique once, calling ``sink(X, Y)`` for each."""
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be >= 1")
    return _Lister(g, alpha, beta, "plain", sink=sink).run()


def _finish(alpha, beta, tree, filtered, uf, lister_stats: EnumStats, stats: RunStats, t0):
    stats.tree_nodes = lister_stats.tree_nodes
    stats.unions = lister_stats.unions_performed
    stats.ab_emitted = lister_stats.ab_bicliques_emitted
    stats.wall_ms = (time.perf_counter() - t0) * 1e3
    return CommunityResult.from_uf(alpha, beta, tree, filtered, uf, stats)


def detect_ab_basic(g: BipartiteGraph, alpha: int, beta: int, *,
                    check: bool = False) -> CommunityResult:
    """Connect the maximal bicliques sharing each listed (α,β)-biclique."""
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be >= 1")
    t0 = time.perf_counter()
    tree = enumerate_maximal_bicliques(g)
    filtered = filter_by_size(tree, alpha, beta)
    uf = DisjointSets(len(tree.bicliques))
    lst = _Lister(g, alpha, beta, "basic", uf=uf, tree=tree, filtered=filtered, check=check)
    es = lst.run()
    return _finish(alpha, beta, tree, filtered, uf, es, RunStats(mbe_nodes=tree.nodes_visited), t0)


def detect_ab_pruned(g: BipartiteGraph, alpha: int, beta: int,
                     seed_state: PartialBcpcState | None = None, *,
                     check: bool = False) -> CommunityResult:
    """Listing with RB pruning; ``seed_state`` (partial-BCPCs from the
    stop-label postorder) gives the union-find a head start."""
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be >= 1")
    t0 = time.perf_counter()
    stats = RunStats()
    if seed_state is None:
        tree = enumerate_maximal_bicliques(g)
        uf = DisjointSets(len(tree.bicliques))
    else:
        if (seed_state.alpha, seed_state.beta) != (alpha, beta):
            raise ValueError(f"seed state was built for {(seed_state.alpha, seed_state.beta)}, "
                             f"not {(alpha, beta)}")
        tree = seed_state.tree
        if tree is None or tree.graph != g:
            raise ValueError("seed state was built on a different graph")
        uf = seed_state.uf.copy()
        stats.pbcpc_plus = seed_state.n_partial
        stats.search_nodes = seed_state.search_nodes
    stats.mbe_nodes = tree.nodes_visited
    filtered = filter_by_size(tree, alpha, beta)
    lst = _Lister(g, alpha, beta, "pruned", uf=uf, tree=tree, filtered=filtered, check=check)
    es = lst.run()
    return _finish(alpha, beta, tree, filtered, uf, es, stats, t0)


def detect_ab_m(g: BipartiteGraph, alpha: int, beta: int, **kw) -> CommunityResult:
    return detect_ab_pruned(g, alpha, beta, None, **kw)


def detect_ab_p(g: BipartiteGraph, alpha: int, beta: int, **kw) -> CommunityResult:
    t0 = time.perf_counter()
    state = compute_partial_plus(g, alpha, beta)
    res = detect_ab_pruned(g, alpha, beta, state, **kw)
    res.stats.wall_ms = (time.perf_counter() - t0) * 1e3
    return res
