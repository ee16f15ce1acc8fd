import pytest
from hypothesis import strategies as st

from bcpc.bigraph import BipartiteGraph
from bcpc.mbe import Biclique

# u0:{v0,v1,v2}, u1:{v0..v3}, u2:{v1,v2,v3}
TOY_EDGES = [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3)]
B1 = Biclique((0, 1), (0, 1, 2))
B2 = Biclique((0, 1, 2), (1, 2))
B3 = Biclique((1, 2), (1, 2, 3))
STAR = Biclique((1,), (0, 1, 2, 3))


@pytest.fixture
def toy():
    return BipartiteGraph.from_edges(3, 4, TOY_EDGES)


@pytest.fixture
def k22():
    return BipartiteGraph.from_edges(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])


@st.composite
def small_graphs(draw, max_side=7):
    n_u = draw(st.integers(0, max_side))
    n_v = draw(st.integers(0, max_side))
    cells = [(u, v) for u in range(n_u) for v in range(n_v)]
    keep = draw(st.lists(st.booleans(), min_size=len(cells), max_size=len(cells)))
    return BipartiteGraph.from_edges(n_u, n_v, [c for c, k in zip(cells, keep) if k])


thresholds = st.tuples(st.integers(1, 3), st.integers(1, 3))
