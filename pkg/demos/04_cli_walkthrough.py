"""
The command line, end to end
============================

Generate an input, detect communities, check them against the oracle and
time a small grid. Runs the ``bcpc`` entry point in-process.
"""

# %%
import tempfile
from pathlib import Path

from bcpc.cli import main

work = Path(tempfile.mkdtemp())
graph = work / "graph.txt"
main(["gen", "--kind", "random", "--n-u", "9", "--n-v", "9", "--p", "0.45", "--seed", "11",
      "--out", str(graph)])
print(graph.read_text().splitlines()[:5], "...")

# %%
# Community file: one line per community, members are "U-labels | V-labels".
out = work / "communities.txt"
main(["detect", "--algo", "ab-p", "--alpha", "2", "--beta", "2", "--input", str(graph),
      "--output", str(out), "--stats", str(work / "stats.json")])
print(out.read_text())
print((work / "stats.json").read_text())

# %%
main(["verify", "--input", str(graph), "--alpha", "2", "--beta", "2"])
main(["verify", "--input", str(graph), "--alpha", "2", "--beta", "2", "--communities", str(out)])

# %%
bench = work / "bench.csv"
main(["bench", "--input", str(graph), "--alphas", "1,2", "--betas", "1,2",
      "--algos", "mbag,pbcpc-plus,ab-p", "--out", str(bench)])
print(bench.read_text())
