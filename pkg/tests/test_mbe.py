import pytest
from hypothesis import given, settings

from bcpc.bigraph import Side, VertexId
from bcpc.generators import random_graph
from bcpc.mbe import (Biclique, bits, enumerate_maximal_bicliques, filter_by_size,
                      select_pivot, to_mask)
from bcpc.oracle import oracle_maximal_bicliques

from conftest import B1, B2, B3, STAR, small_graphs, thresholds


def test_k22_has_one(k22):
    assert enumerate_maximal_bicliques(k22).bicliques == [Biclique((0, 1), (0, 1))]


def test_toy(toy):
    tree = enumerate_maximal_bicliques(toy)
    assert sorted(tree.bicliques) == sorted([B1, B2, B3, STAR])
    assert str(B1) == "0,1 | 0,1,2"
    assert all(b.is_complete_in(toy) for b in tree.bicliques)


def test_filter_by_size(toy):
    tree = enumerate_maximal_bicliques(toy)
    assert sorted(tree.bicliques[i] for i in filter_by_size(tree, 2, 2)) == [B1, B2, B3]
    assert filter_by_size(tree, 1, 1) == list(range(4))
    assert filter_by_size(tree, 4, 1) == []


def test_select_pivot_prefers_fewest_non_neighbours(toy):
    # every candidate in play; u1 (index 1) sees all of V
    p, seq = select_pivot(0b111, 0b1111, 0, 0, toy)
    assert p == VertexId(Side.U, 1)
    assert seq == [VertexId(Side.U, 1)]
    with pytest.raises(ValueError):
        select_pivot(0, 0, 1, 0, toy)


def test_pivot_from_exclusion_set_is_not_branched(toy):
    p, seq = select_pivot(0b101, 0b1111, 0b010, 0, toy)
    assert p == VertexId(Side.U, 1)
    assert seq == []


def test_bad_order_rejected(toy):
    with pytest.raises(ValueError):
        enumerate_maximal_bicliques(toy, order=[0, 0, 1])


@pytest.mark.parametrize("seed", range(30))
def test_random_8x8_matches_oracle(seed):
    g = random_graph(8, 8, 0.3, seed)
    assert sorted(enumerate_maximal_bicliques(g).bicliques) == oracle_maximal_bicliques(g)


@settings(max_examples=150)
@given(small_graphs())
def test_pivoting_and_order_do_not_change_output(g):
    want = oracle_maximal_bicliques(g)
    rev = list(range(g.n_u))[::-1]
    for kw in ({}, {"pivot": False}, {"order": rev}, {"pivot": False, "order": rev}):
        got = enumerate_maximal_bicliques(g, **kw).bicliques
        assert len(set(got)) == len(got)
        assert sorted(got) == want


@settings(max_examples=100)
@given(small_graphs(), thresholds)
def test_retained_tree_invariants(g, ab):
    alpha, beta = ab
    tree = enumerate_maximal_bicliques(g, retain_tree=True, ab=ab)
    leaves = {}
    for nd in tree.iter_nodes():
        if nd is tree.root:
            continue
        assert nd.real
        # R, C and X of one side together are the common neighbourhood of the other R
        if nd.r_v:
            common_u = to_mask(range(g.n_u))
            for v in bits(nd.r_v):
                common_u &= g.mask_v[v]
            assert nd.r_u | nd.c_u | nd.x_u == common_u
        if nd.is_leaf and not (nd.x_u | nd.x_v):
            assert nd.biclique_id is not None
            leaves[nd.biclique_id] = Biclique(tuple(bits(nd.r_u)), tuple(bits(nd.r_v)))
        else:
            assert nd.biclique_id is None
        reached = nd.r_u.bit_count() >= alpha and nd.r_v.bit_count() >= beta
        p = nd.parent
        parent_reached = p is not None and p.r_u.bit_count() >= alpha and p.r_v.bit_count() >= beta
        assert nd.is_ab_node == (reached and not parent_reached)
    assert leaves == dict(enumerate(tree.bicliques))


@given(small_graphs())
def test_inverted_index_is_exact(g):
    tree = enumerate_maximal_bicliques(g)
    for u in range(g.n_u):
        assert tree.index_u[u] == [i for i, b in enumerate(tree.bicliques) if u in b.X]
    for v in range(g.n_v):
        assert tree.containing(VertexId(Side.V, v)) == \
            [i for i, b in enumerate(tree.bicliques) if v in b.Y]


def test_on_finish_sees_every_node_after_children(toy):
    seen = []

    def hook(nd, tree):
        for _, ch in nd.children:
            assert ch in seen
        seen.append(nd)

    tree = enumerate_maximal_bicliques(toy, on_finish=hook)
    assert seen[-1] is tree.root
    assert len(seen) == tree.nodes_visited
