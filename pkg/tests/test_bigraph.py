import io

import pytest
from hypothesis import given

from bcpc.bigraph import (BipartiteGraph, EdgeListParseError, Side, VertexId, dump_edge_list,
                          load_edge_list, neighbors, two_hop_degrees, two_hop_order)

from conftest import small_graphs


def test_load_skips_comments_and_compacts_labels():
    text = "% konect header\n# another\n\n10 7\n10 3\n4 7\n"
    g = load_edge_list(io.StringIO(text))
    assert (g.n_u, g.n_v, g.m) == (2, 2, 3)
    assert g.u_labels == (10, 4) and g.v_labels == (7, 3)
    assert g.adj_u == ((0, 1), (0,))


def test_duplicate_edges_collapse():
    g = load_edge_list(["1 1", "1 1", "2 1"])
    assert g.m == 2


def test_swap_sides():
    g = load_edge_list(["1 5", "2 5"], swap_sides=True)
    assert (g.n_u, g.n_v) == (1, 2)
    assert g.u_labels == (5,)


@pytest.mark.parametrize("line, reason", [
    ("1 2 3", "columns"), ("1", "columns"), ("a b", "non-integer"), ("-1 2", "negative")])
def test_parse_errors_carry_line_number(line, reason):
    with pytest.raises(EdgeListParseError, match=reason) as exc:
        load_edge_list(["0 0", line])
    assert exc.value.lineno == 2


def test_empty_input():
    g = load_edge_list([])
    assert (g.n_u, g.n_v, g.m) == (0, 0, 0)


def test_neighbors(toy):
    assert neighbors(toy, VertexId(Side.U, 2)) == (1, 2, 3)
    assert neighbors(toy, VertexId(Side.V, 0)) == (0, 1)
    with pytest.raises(IndexError):
        neighbors(toy, VertexId(Side.V, 4))


def test_two_hop(toy):
    assert two_hop_degrees(toy) == [2, 2, 2]
    assert two_hop_order(toy) == [0, 1, 2]
    g = BipartiteGraph.from_edges(3, 2, [(0, 0), (1, 0), (1, 1), (2, 1)])
    assert two_hop_order(g) == [0, 2, 1]


@given(small_graphs())
def test_dump_load_dump_is_fixed_point(g):
    out = io.StringIO()
    dump_edge_list(g, out)
    g2 = load_edge_list(io.StringIO(out.getvalue()))
    out2 = io.StringIO()
    dump_edge_list(g2, out2)
    assert out.getvalue() == out2.getvalue()
    assert sorted(g2.labeled_edges()) == sorted(g.labeled_edges())


@given(small_graphs())
def test_adjacency_is_symmetric(g):
    for u, v in g.edges():
        assert u in g.adj_v[v] and v in g.adj_u[u]
    assert sum(map(len, g.adj_u)) == sum(map(len, g.adj_v)) == g.m
    assert g.swapped().swapped() == g
