"""
Six detectors, one answer
=========================

Every detector returns the same partition; they differ in how much work
they do to get there.
"""

# %%
from bcpc import ALGORITHMS
from bcpc.generators import random_graph
from bcpc.oracle import oracle_bcpc

g = random_graph(10, 10, 0.45, seed=3)
alpha, beta = 2, 2
truth = oracle_bcpc(g, alpha, beta)
print(f"{g.m} edges, {len(truth)} communities")

# %%
# Stats worth comparing: adjacency tests for the tree-based family,
# listing-tree nodes for the (alpha,beta)-biclique family.
print(f"{'algo':<11}{'agrees':<8}{'adj tests':>10}{'tree nodes':>12}{'pbcpc':>7}{'pbcpc+':>8}")
for name, fn in ALGORITHMS.items():
    res = fn(g, alpha, beta)
    s = res.stats
    print(f"{name:<11}{str(res.communities() == truth):<8}{s.adjacency_tests:>10}"
          f"{s.tree_nodes:>12}{str(s.pbcpc or ''):>7}{str(s.pbcpc_plus or ''):>8}")
