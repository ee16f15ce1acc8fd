"""
Where partial communities help, and where they do not
=====================================================

Two synthetic inputs: a single dense block, where the partial-community
pass merges everything and the listing stops at the root, and a long chain
of overlapping blocks, where each block ends up in its own partial set and
the pruned listing has to walk most of the tree anyway.
"""

# %%
import time

from bcpc import ALGORITHMS
from bcpc.generators import blocks


def run(g, names=("mbag", "ab", "ab-m", "ab-p")):
    for name in names:
        t = time.perf_counter()
        res = ALGORITHMS[name](g, 2, 2)
        ms = (time.perf_counter() - t) * 1e3
        print(f"  {name:<6}{ms:9.1f} ms  tree_nodes={res.stats.tree_nodes:<6}"
              f"bcpc={res.stats.bcpc}  pbcpc+={res.stats.pbcpc_plus}")


# %%
# One K(12,12): a single maximal biclique, so the root RB already sits in one set.
print("one K12,12")
run(blocks(1, 12, 0))

# %%
# A chain of K(6,6) blocks sharing two vertices per side with the next one.
# Between blocks there are also 2x10 and 10x2 "bridge" bicliques; the
# partial pass joins each block to its bridges but never across to the
# next block, so pbcpc+ grows with the chain length.
for b in (25, 50, 100):
    print(f"chain of {b} K6,6")
    run(blocks(b, 6, 2))
