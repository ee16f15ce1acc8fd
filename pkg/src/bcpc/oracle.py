"""Brute-force reference answers for small graphs.

Everything here is written for obviousness, not speed, and refuses inputs
above the configured limits instead of running for hours.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .bigraph import BipartiteGraph
from .mbe import Biclique


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class OracleLimits:
    max_side: int = 16
    max_pairs: int = 10**7


DEFAULT_LIMITS = OracleLimits()


def _check(g: BipartiteGraph, limits: OracleLimits):
    if min(g.n_u, g.n_v) > limits.max_side:
        raise OracleLimitError(
            f"smaller side has {min(g.n_u, g.n_v)} vertices; oracle limit is {limits.max_side}")


def _common(adj: list[set[int]], S, universe: set[int]) -> set[int]:
    out = set(universe)
    for s in S:
        out &= adj[s]
    return out


def oracle_maximal_bicliques(g: BipartiteGraph, limits: OracleLimits = DEFAULT_LIMITS) -> list[Biclique]:
    """All maximal bicliques with non-empty sides, sorted.

    Every non-empty subset S of the smaller side is closed twice through
    common neighbourhoods; a pair survives iff it is a fixed point.
    """
    _check(g, limits)
    adj_u = [set(a) for a in g.adj_u]
    adj_v = [set(a) for a in g.adj_v]
    all_u, all_v = set(range(g.n_u)), set(range(g.n_v))
    swap = g.n_v < g.n_u
    small, big = (adj_v, adj_u) if swap else (adj_u, adj_v)
    small_all, big_all = (all_v, all_u) if swap else (all_u, all_v)
    found = set()
    n_small = len(small)
    for k in range(1, n_small + 1):
        for S in combinations(range(n_small), k):
            T = _common(small, S, big_all)
            if not T:
                continue
            S2 = _common(big, T, small_all)
            if _common(small, S2, big_all) != T:
                continue
            X, Y = (T, S2) if swap else (S2, T)
            found.add(Biclique(tuple(sorted(X)), tuple(sorted(Y))))
    return sorted(found)


def is_adjacent(a: Biclique, b: Biclique, alpha: int, beta: int) -> bool:
    return len(set(a.X) & set(b.X)) >= alpha and len(set(a.Y) & set(b.Y)) >= beta


def oracle_bcpc(g: BipartiteGraph, alpha: int, beta: int,
                limits: OracleLimits = DEFAULT_LIMITS) -> list[list[Biclique]]:
    """BCPCs as sorted lists of bicliques, ordered by their first member."""
    if alpha < 1 or beta < 1:
        raise ValueError("alpha and beta must be >= 1")
    kept = [b for b in oracle_maximal_bicliques(g, limits)
            if len(b.X) >= alpha and len(b.Y) >= beta]
    n = len(kept)
    if n * n > limits.max_pairs:
        raise OracleLimitError(f"{n} filtered bicliques exceed the pairwise limit")
    adj = [[j for j in range(n) if j != i and is_adjacent(kept[i], kept[j], alpha, beta)]
           for i in range(n)]
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp, q = [], deque([s])
        while q:
            i = q.popleft()
            comp.append(kept[i])
            for j in adj[i]:
                if not seen[j]:
                    seen[j] = True
                    q.append(j)
        out.append(sorted(comp))
    return sorted(out)


def oracle_count_ab(g: BipartiteGraph, alpha: int, beta: int,
                    limits: OracleLimits = DEFAULT_LIMITS) -> int:
    """Number of complete (alpha-subset of U, beta-subset of V) pairs."""
    _check(g, limits)
    if comb(g.n_u, alpha) * comb(g.n_v, beta) > limits.max_pairs:
        raise OracleLimitError("too many (alpha, beta) subset pairs for brute force")
    adj_u = [set(a) for a in g.adj_u]
    total = 0
    for X in combinations(range(g.n_u), alpha):
        for Y in combinations(range(g.n_v), beta):
            if all(y in adj_u[x] for x in X for y in Y):
                total += 1
    return total
