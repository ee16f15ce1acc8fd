import pytest
from hypothesis import given, settings

from bcpc.abenum import (build_two_hop, detect_ab_basic, detect_ab_m, detect_ab_p,
                         detect_ab_pruned, enumerate_ab)
from bcpc.bigraph import BipartiteGraph
from bcpc.generators import blocks
from bcpc.oracle import oracle_bcpc, oracle_count_ab
from bcpc.pbcpc import compute_partial_plus

from conftest import B1, B2, B3, small_graphs, thresholds


def _collect(g, alpha, beta):
    out = []
    enumerate_ab(g, alpha, beta, lambda x, y: out.append((x, y)))
    return out


def test_k22_edges(k22):
    assert sorted(_collect(k22, 1, 1)) == [((0,), (0,)), ((0,), (1,)), ((1,), (0,)), ((1,), (1,))]


def test_toy_seven(toy):
    got = _collect(toy, 2, 2)
    assert len(got) == len(set(got)) == 7
    by_u = {}
    for x, y in got:
        by_u[x] = by_u.get(x, 0) + 1
    assert by_u == {(0, 1): 3, (0, 2): 1, (1, 2): 3}


def test_two_hop_graph(toy):
    h = build_two_hop(toy)
    assert h.edges() == [(0, 1), (0, 2), (1, 2)]
    g = BipartiteGraph.from_edges(3, 2, [(0, 0), (1, 1), (2, 1)])
    assert build_two_hop(g).edges() == [(1, 2)]


def test_toy_detectors(toy):
    for fn in (detect_ab_basic, detect_ab_m, detect_ab_p):
        assert fn(toy, 2, 2, check=True).communities() == [[B1, B2, B3]]


def test_no_ab_bicliques_means_singletons():
    g = BipartiteGraph.from_edges(3, 3, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 0)])
    res = detect_ab_basic(g, 2, 1)
    assert all(len(c) == 1 for c in res.communities())
    assert res.stats.unions == 0


def test_root_prune_when_everything_is_already_merged():
    # one complete block: a single maximal biclique, nothing left to connect
    g = blocks(1, 6, 0)
    basic = detect_ab_basic(g, 2, 2)
    pruned = detect_ab_m(g, 2, 2)
    assert pruned.stats.tree_nodes == 1
    assert basic.stats.tree_nodes > 20 * pruned.stats.tree_nodes


def test_seed_state_must_match(toy, k22):
    state = compute_partial_plus(toy, 2, 2)
    with pytest.raises(ValueError):
        detect_ab_pruned(toy, 1, 2, state)
    with pytest.raises(ValueError):
        detect_ab_pruned(k22, 2, 2, state)
    with pytest.raises(ValueError):
        enumerate_ab(toy, 0, 1)


@settings(max_examples=150)
@given(small_graphs(), thresholds)
def test_listing_matches_brute_force(g, ab):
    got = _collect(g, *ab)
    assert len(got) == len(set(got)) == oracle_count_ab(g, *ab)
    for x, y in got:
        assert len(x) == ab[0] and len(y) == ab[1]
        assert all(g.has_edge(u, v) for u in x for v in y)


@settings(max_examples=120)
@given(small_graphs(), thresholds)
def test_detectors_agree_and_prune_monotonically(g, ab):
    want = oracle_bcpc(g, *ab)
    # check=True recomputes RB by brute-force containment at every union
    runs = [fn(g, *ab, check=True) for fn in (detect_ab_basic, detect_ab_m, detect_ab_p)]
    for r in runs:
        assert r.communities() == want
    basic, m, p = (r.stats.tree_nodes for r in runs)
    assert p <= m <= basic
