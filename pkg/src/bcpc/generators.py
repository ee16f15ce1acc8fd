"""Seeded synthetic inputs: random graphs, overlapping block chains, edge samples."""

from __future__ import annotations

import random as _random

from .bigraph import BipartiteGraph


def random_graph(n_u: int, n_v: int, p: float, seed: int = 0) -> BipartiteGraph:
    """Each of the ``n_u * n_v`` edges kept independently with probability ``p``."""
    if n_u < 0 or n_v < 0:
        raise ValueError("side sizes must be non-negative")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = _random.Random(seed)
    edges = [(u, v) for u in range(n_u) for v in range(n_v) if rng.random() < p]
    return BipartiteGraph.from_edges(n_u, n_v, edges)


def blocks(b: int, size: int, overlap: int) -> BipartiteGraph:
    """A chain of ``b`` complete ``K(size,size)`` blocks.

    Block ``i`` covers U and V indices ``i*(size-overlap) .. i*(size-overlap)+size-1``,
    so consecutive blocks share ``overlap`` vertices on each side.
    """
    if b < 0 or size < 1:
        raise ValueError("need b >= 0 blocks of size >= 1")
    if not 0 <= overlap < size:
        raise ValueError("overlap must satisfy 0 <= overlap < size")
    step = size - overlap
    n = (b - 1) * step + size if b else 0
    edges = set()
    for i in range(b):
        lo = i * step
        for u in range(lo, lo + size):
            for v in range(lo, lo + size):
                edges.add((u, v))
    return BipartiteGraph.from_edges(n, n, sorted(edges))


def sample(g: BipartiteGraph, fraction: float, seed: int = 0) -> BipartiteGraph:
    """Keep a uniformly drawn ``round(fraction * m)`` edges; labels are preserved."""
    if not 0.0 <= fraction <= 1.0:
        raise ValueError(f"fraction {fraction} outside [0, 1]")
    edges = g.edges()
    k = round(fraction * len(edges))
    keep = sorted(_random.Random(seed).sample(range(len(edges)), k))
    return BipartiteGraph.from_edges(g.n_u, g.n_v, [edges[i] for i in keep],
                                     g.u_labels, g.v_labels)
