"""(α,β)-biclique percolation community detection on bipartite graphs."""

from .abenum import (build_two_hop, detect_ab_basic, detect_ab_m, detect_ab_p,
                     detect_ab_pruned, enumerate_ab)
from .bigraph import (BipartiteGraph, EdgeListParseError, Side, VertexId,
                      load_edge_list, neighbors, two_hop_order)
from .mbag import CommunityResult, RunStats, adjacent, detect_mbag, neighbor_candidates
from .mbe import Biclique, MbeTree, enumerate_maximal_bicliques, filter_by_size
from .pbcpc import (compute_partial_basic, compute_partial_plus, detect_pbcpc,
                    detect_pbcpc_plus, traverse_reduced_mbag)
from .unionfind import DisjointSets

ALGORITHMS = {
    "mbag": detect_mbag,
    "pbcpc": detect_pbcpc,
    "pbcpc-plus": detect_pbcpc_plus,
    "ab": detect_ab_basic,
    "ab-m": detect_ab_m,
    "ab-p": detect_ab_p,
}


def detect(g: BipartiteGraph, alpha: int, beta: int, algo: str = "ab-p") -> CommunityResult:
    """Run one of the six detectors by name (see ``ALGORITHMS``)."""
    try:
        fn = ALGORITHMS[algo]
    except KeyError:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {sorted(ALGORITHMS)}") from None
    return fn(g, alpha, beta)


__all__ = [
    "ALGORITHMS", "Biclique", "BipartiteGraph", "CommunityResult", "DisjointSets",
    "EdgeListParseError", "MbeTree", "RunStats", "Side", "VertexId", "adjacent",
    "build_two_hop", "compute_partial_basic", "compute_partial_plus", "detect",
    "detect_ab_basic", "detect_ab_m", "detect_ab_p", "detect_ab_pruned", "detect_mbag",
    "detect_pbcpc", "detect_pbcpc_plus", "enumerate_ab", "enumerate_maximal_bicliques",
    "filter_by_size", "load_edge_list", "neighbor_candidates", "neighbors",
    "traverse_reduced_mbag", "two_hop_order",
]
