import pytest

from bcpc.generators import blocks, random_graph, sample


def test_two_k33_sharing_one_vertex_per_side():
    g = blocks(2, 3, 1)
    assert (g.n_u, g.n_v, g.m) == (5, 5, 17)
    assert g.adj_u[2] == (0, 1, 2, 3, 4)
    assert not g.has_edge(0, 3)


def test_chain_size():
    g = blocks(200, 6, 2)
    assert (g.n_u, g.m) == (802, 200 * 36 - 199 * 4)


def test_random_is_seeded():
    assert random_graph(8, 8, 0.3, 7) == random_graph(8, 8, 0.3, 7)
    assert random_graph(8, 8, 0.3, 7) != random_graph(8, 8, 0.3, 8)
    assert random_graph(4, 4, 1.0).m == 16 and random_graph(4, 4, 0.0).m == 0


def test_sample():
    g = random_graph(10, 10, 0.5, 1)
    assert sample(g, 1.0) == g
    half = sample(g, 0.5, seed=3)
    assert half.m == round(0.5 * g.m)
    assert set(half.edges()) <= set(g.edges())
    assert half == sample(g, 0.5, seed=3)


@pytest.mark.parametrize("call", [
    lambda: random_graph(3, 3, 1.5), lambda: blocks(2, 3, 3), lambda: blocks(2, 0, 0),
    lambda: sample(random_graph(2, 2, 1.0), -0.1)])
def test_invalid_parameters(call):
    with pytest.raises(ValueError):
        call()
