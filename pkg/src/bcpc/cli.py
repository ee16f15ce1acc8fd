"""``bcpc`` command line: detect, verify, gen, bench.

Every file the commands write is a pure function of the input and the
flags, except the ``wall_ms`` timings in stats and bench output.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Sequence

from . import ALGORITHMS, generators
from .abenum import enumerate_ab
from .bigraph import BipartiteGraph, EdgeListParseError, dump_edge_list, load_edge_list
from .mbag import CommunityResult
from .mbe import Biclique
from .oracle import OracleLimitError, oracle_bcpc

STATS_KEYS = ("n_biclique", "filtered", "pbcpc", "pbcpc_plus", "bcpc", "tree_nodes",
              "adjacency_tests", "unions", "wall_ms")
BENCH_COLUMNS = ("algo", "alpha", "beta", "wall_ms", "tree_nodes", "bcpc", "n_biclique",
                 "filtered", "pbcpc", "pbcpc_plus", "adjacency_tests", "unions")


class CliError(Exception):
    """A user-facing failure; printed without a traceback."""


def biclique_label(g: BipartiteGraph, b: Biclique) -> str:
    """Canonical string of ``b`` in the input file's own vertex labels."""
    xs = sorted(g.u_labels[x] for x in b.X)
    ys = sorted(g.v_labels[y] for y in b.Y)
    return f"{','.join(map(str, xs))} | {','.join(map(str, ys))}"


def format_communities(g: BipartiteGraph, groups: Sequence[Sequence[Biclique]]) -> str:
    """One line per community, members sorted and joined by `` ; ``, lines
    ordered by their smallest member."""
    lines = [sorted(biclique_label(g, b) for b in grp) for grp in groups]
    lines.sort()
    return "".join(" ; ".join(members) + "\n" for members in lines)


def format_bicliques(g: BipartiteGraph, bicliques: Sequence[Biclique]) -> str:
    return "".join(s + "\n" for s in sorted(biclique_label(g, b) for b in bicliques))


def stats_record(res: CommunityResult) -> dict:
    d = res.stats.as_dict()
    return {k: d[k] for k in STATS_KEYS}


def _read_graph(path: str, swap: bool = False) -> BipartiteGraph:
    try:
        with open(path, encoding="utf-8") as fh:
            return load_edge_list(fh, swap_sides=swap)
    except OSError as e:
        raise CliError(f"cannot read {path}: {e.strerror or e}") from None
    except EdgeListParseError as e:
        raise CliError(f"{path}: {e}") from None


@contextmanager
def _writing(path: str):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh
    except OSError as e:
        raise CliError(f"cannot write {path}: {e.strerror or e}") from None


def _write_text(path: str, text: str) -> None:
    with _writing(path) as fh:
        fh.write(text)


def _thresholds(alpha: int, beta: int) -> None:
    if alpha < 1 or beta < 1:
        raise CliError("--alpha and --beta must be >= 1")


def _int_list(s: str) -> list[int]:
    try:
        out = [int(t) for t in s.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {s!r}") from None
    if not out:
        raise argparse.ArgumentTypeError("empty list")
    return out


def _algo_list(s: str) -> list[str]:
    out = [t.strip() for t in s.split(",") if t.strip()]
    bad = [a for a in out if a not in ALGORITHMS]
    if bad or not out:
        raise argparse.ArgumentTypeError(f"unknown algorithm(s) {bad}; choose from {list(ALGORITHMS)}")
    return out


# -- commands ---------------------------------------------------------------

def cmd_detect(args) -> int:
    g = _read_graph(args.input, args.swap_sides)
    if args.count_ab:
        _thresholds(args.alpha, args.beta)
        print(enumerate_ab(g, args.alpha, args.beta).ab_bicliques_emitted)
        return 0
    if args.algo is None or args.output is None:
        raise CliError("detect needs --algo and --output (or --count-ab)")
    _thresholds(args.alpha, args.beta)
    res = ALGORITHMS[args.algo](g, args.alpha, args.beta)
    _write_text(args.output, format_communities(g, res.communities()))
    if args.stats:
        _write_text(args.stats, json.dumps(stats_record(res), indent=1, sort_keys=True) + "\n")
    if args.dump_bicliques:
        _write_text(args.dump_bicliques, format_bicliques(g, res.tree.bicliques))
    return 0


def verify_graph(g: BipartiteGraph, alpha: int, beta: int) -> list[str]:
    """Run all detectors and the oracle; return the list of failed checks."""
    want = oracle_bcpc(g, alpha, beta)
    failures = []
    runs = {name: fn(g, alpha, beta) for name, fn in ALGORITHMS.items()}
    for name, res in runs.items():
        got = res.communities()
        if got != want:
            failures.append(f"{name}: partition differs from the oracle "
                            f"({len(got)} vs {len(want)} communities)")
    n_b = runs["mbag"].stats.n_biclique
    pb = runs["pbcpc"].stats.pbcpc
    pbp = runs["pbcpc-plus"].stats.pbcpc_plus
    bc = len(want)
    if not (n_b >= pb >= pbp >= bc):
        failures.append(f"count chain broken: n_biclique={n_b} pbcpc={pb} "
                        f"pbcpc_plus={pbp} bcpc={bc}")
    nodes = [runs[k].stats.tree_nodes for k in ("ab-p", "ab-m", "ab")]
    if not nodes[0] <= nodes[1] <= nodes[2]:
        failures.append(f"node ordering broken: ab-p={nodes[0]} ab-m={nodes[1]} ab={nodes[2]}")
    return failures


def first_divergence(expected: list[str], got: list[str]) -> str | None:
    for i in range(max(len(expected), len(got))):
        e = expected[i] if i < len(expected) else "<none>"
        o = got[i] if i < len(got) else "<none>"
        if e != o:
            return f"community {i + 1}:\n  expected: {e}\n  found:    {o}"
    return None


def cmd_verify(args) -> int:
    _thresholds(args.alpha, args.beta)
    g = _read_graph(args.input, args.swap_sides)
    try:
        if args.communities:
            try:
                got = Path(args.communities).read_text(encoding="utf-8").splitlines()
            except OSError as e:
                raise CliError(f"cannot read {args.communities}: {e.strerror or e}") from None
            expected = format_communities(g, oracle_bcpc(g, args.alpha, args.beta)).splitlines()
            diff = first_divergence(expected, got)
            failures = [diff] if diff else []
        else:
            failures = verify_graph(g, args.alpha, args.beta)
    except OracleLimitError as e:
        raise CliError(f"input too large for the brute-force oracle ({e}); "
                       "verify a sample instead, e.g. `bcpc gen --kind sample`") from None
    if failures:
        print("FAIL")
        for f in failures:
            print(f)
        return 1
    print("PASS")
    return 0


def cmd_gen(args) -> int:
    try:
        if args.kind == "random":
            g = generators.random_graph(args.n_u, args.n_v, args.p, args.seed)
        elif args.kind == "blocks":
            g = generators.blocks(args.b, args.size, args.overlap)
        else:
            if not args.input:
                raise CliError("gen --kind sample needs --input")
            g = generators.sample(_read_graph(args.input), args.fraction, args.seed)
    except ValueError as e:
        raise CliError(str(e)) from None
    with _writing(args.out) as fh:
        dump_edge_list(g, fh)
    return 0


def cmd_bench(args) -> int:
    g = _read_graph(args.input, args.swap_sides)
    if min(args.alphas + args.betas) < 1:
        raise CliError("--alphas and --betas must be >= 1")
    with _writing(args.out) as fh:
        w = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS, lineterminator="\n")
        w.writeheader()
        for alpha in args.alphas:
            for beta in args.betas:
                for algo in args.algos:
                    res = ALGORITHMS[algo](g, alpha, beta)
                    row = {k: v for k, v in res.stats.as_dict().items() if k in BENCH_COLUMNS}
                    row.update(algo=algo, alpha=alpha, beta=beta,
                               wall_ms=f"{res.stats.wall_ms:.3f}")
                    w.writerow(row)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bcpc", description="(α,β)-biclique percolation communities")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("detect", help="detect communities with one algorithm")
    d.add_argument("--algo", choices=list(ALGORITHMS))
    d.add_argument("--alpha", type=int, required=True)
    d.add_argument("--beta", type=int, required=True)
    d.add_argument("--input", required=True)
    d.add_argument("--output")
    d.add_argument("--swap-sides", action="store_true", help="read columns as (V, U)")
    d.add_argument("--stats", metavar="FILE")
    d.add_argument("--dump-bicliques", metavar="FILE")
    d.add_argument("--count-ab", action="store_true",
                   help="print the number of (α,β)-bicliques and exit")
    d.set_defaults(func=cmd_detect)

    v = sub.add_parser("verify", help="cross-check all algorithms against the oracle")
    v.add_argument("--input", required=True)
    v.add_argument("--alpha", type=int, required=True)
    v.add_argument("--beta", type=int, required=True)
    v.add_argument("--swap-sides", action="store_true")
    v.add_argument("--communities", metavar="FILE",
                   help="compare this community file with the oracle instead")
    v.set_defaults(func=cmd_verify)

    gp = sub.add_parser("gen", help="write a synthetic edge list")
    gp.add_argument("--kind", choices=("random", "blocks", "sample"), required=True)
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--out", required=True)
    gp.add_argument("--n-u", type=int, default=8)
    gp.add_argument("--n-v", type=int, default=8)
    gp.add_argument("--p", type=float, default=0.3)
    gp.add_argument("--b", type=int, default=2, help="number of blocks")
    gp.add_argument("--size", type=int, default=3)
    gp.add_argument("--overlap", type=int, default=1)
    gp.add_argument("--input", help="edge list to sample from")
    gp.add_argument("--fraction", type=float, default=1.0)
    gp.set_defaults(func=cmd_gen)

    b = sub.add_parser("bench", help="time several algorithms over a grid of thresholds")
    b.add_argument("--input", required=True)
    b.add_argument("--alphas", type=_int_list, required=True)
    b.add_argument("--betas", type=_int_list, required=True)
    b.add_argument("--algos", type=_algo_list, default=list(ALGORITHMS))
    b.add_argument("--out", required=True)
    b.add_argument("--swap-sides", action="store_true")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"bcpc: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
