"""
Finding one biclique percolation community by hand
==================================================

A three-by-four bipartite graph, four maximal bicliques, and the community
they form at alpha = beta = 2.
"""

# %%
# Build the graph. U-vertices are users, V-vertices are items.
from bcpc import BipartiteGraph, detect, enumerate_ab, enumerate_maximal_bicliques

g = BipartiteGraph.from_edges(3, 4, [
    (0, 0), (0, 1), (0, 2),
    (1, 0), (1, 1), (1, 2), (1, 3),
    (2, 1), (2, 2), (2, 3),
])

# %%
# Every maximal biclique, in enumeration order.
tree = enumerate_maximal_bicliques(g)
for i, b in enumerate(tree.bicliques):
    print(i, b)

# %%
# ``1 | 0,1,2,3`` has a single U-vertex, so it is dropped at alpha = 2.
# The other three overlap pairwise in at least two vertices per side
# along a chain, which is enough to percolate.
res = detect(g, 2, 2, algo="ab-p")
for community in res.communities():
    print(" ; ".join(map(str, community)))

# %%
# The (2,2)-bicliques that glue them together.
enumerate_ab(g, 2, 2, sink=lambda X, Y: print(X, Y))
