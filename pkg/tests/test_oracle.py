"""Frozen reference answers; everything else is checked against these functions."""

import pytest

from bcpc.bigraph import BipartiteGraph
from bcpc.generators import blocks, random_graph
from bcpc.mbe import Biclique
from bcpc.oracle import (OracleLimitError, OracleLimits, is_adjacent, oracle_bcpc,
                         oracle_count_ab, oracle_maximal_bicliques)

from conftest import B1, B2, B3, STAR


def test_toy_maximal_bicliques(toy):
    assert oracle_maximal_bicliques(toy) == sorted([B1, B2, B3, STAR])


def test_toy_single_community(toy):
    assert oracle_bcpc(toy, 2, 2) == [[B1, B2, B3]]


def test_toy_ab_count(toy):
    assert oracle_count_ab(toy, 2, 2) == 7


def test_k22(k22):
    assert oracle_maximal_bicliques(k22) == [Biclique((0, 1), (0, 1))]
    assert oracle_count_ab(k22, 1, 1) == 4


def test_two_blocks_sharing_one_vertex_each():
    g = blocks(2, 3, 1)
    assert oracle_maximal_bicliques(g) == [
        Biclique((0, 1, 2), (0, 1, 2)), Biclique((0, 1, 2, 3, 4), (2,)),
        Biclique((2,), (0, 1, 2, 3, 4)), Biclique((2, 3, 4), (2, 3, 4))]
    assert len(oracle_bcpc(g, 2, 2)) == 2
    assert len(oracle_bcpc(g, 1, 1)) == 1


@pytest.mark.parametrize("seed, m, n_max, n_bcpc, n_ab", [
    (1, 26, 12, [1, 1, 1, 1, 1, 1, 1, 1, 4], [26, 45, 45, 48]),
    (2, 18, 10, [1, 1, 1, 2, 2, 2, 1, 3, 0], [18, 24, 21, 12]),
    (3, 19, 12, [1, 2, 2, 1, 3, 2, 3, 2, 0], [19, 20, 25, 11]),
])
def test_frozen_random_instances(seed, m, n_max, n_bcpc, n_ab):
    g = random_graph(7, 6, 0.5, seed)
    assert g.m == m
    assert len(oracle_maximal_bicliques(g)) == n_max
    assert [len(oracle_bcpc(g, a, b)) for a in (1, 2, 3) for b in (1, 2, 3)] == n_bcpc
    assert [oracle_count_ab(g, a, b) for a in (1, 2) for b in (1, 2)] == n_ab


def test_empty_graph():
    g = BipartiteGraph.from_edges(0, 0, [])
    assert oracle_maximal_bicliques(g) == []
    assert oracle_bcpc(g, 1, 1) == []


def test_adjacency_is_thresholded_intersection():
    assert is_adjacent(B1, B2, 2, 2)
    assert not is_adjacent(B1, B3, 2, 2)
    assert is_adjacent(B1, B3, 1, 2)


def test_limits_refuse_large_inputs():
    g = random_graph(20, 20, 0.5, 0)
    with pytest.raises(OracleLimitError):
        oracle_maximal_bicliques(g)
    with pytest.raises(OracleLimitError):
        oracle_count_ab(random_graph(12, 12, 0.5, 0), 3, 3, OracleLimits(max_pairs=100))


def test_rejects_bad_thresholds(toy):
    with pytest.raises(ValueError):
        oracle_bcpc(toy, 0, 1)
