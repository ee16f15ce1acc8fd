"""Bipartite graph model, edge-list ingestion and neighbourhood queries."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, TextIO


class Side(enum.Enum):
    U = "U"
    V = "V"


class VertexId(NamedTuple):
    side: Side
    index: int


class EdgeListParseError(ValueError):
    """Raised on a malformed edge-list line; carries the 1-based line number."""

    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line!r}")
        self.lineno = lineno
        self.line = line


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True, eq=False)
class BipartiteGraph:
    """Immutable two-sided adjacency structure.

    ``adj_u[u]`` is the strictly increasing tuple of V-indices adjacent to
    U-vertex ``u`` (and symmetrically for ``adj_v``).  Original vertex labels
    from the input file are kept in ``u_labels``/``v_labels`` so that results
    can be reported in the caller's namespace.

    Bitmask views of the adjacency (bit ``j`` of ``mask_u[u]`` set iff
    ``(u, j)`` is an edge) are built once and used by the set-heavy
    enumeration code.
    """

    n_u: int
    n_v: int
    adj_u: tuple[tuple[int, ...], ...]
    adj_v: tuple[tuple[int, ...], ...]
    u_labels: tuple[int, ...] = ()
    v_labels: tuple[int, ...] = ()
    mask_u: tuple[int, ...] = field(init=False, repr=False)
    mask_v: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if len(self.adj_u) != self.n_u or len(self.adj_v) != self.n_v:
            raise ValueError("adjacency length does not match side cardinality")
        if not self.u_labels:
            object.__setattr__(self, "u_labels", tuple(range(self.n_u)))
        if not self.v_labels:
            object.__setattr__(self, "v_labels", tuple(range(self.n_v)))
        object.__setattr__(self, "mask_u", tuple(_mask(a) for a in self.adj_u))
        object.__setattr__(self, "mask_v", tuple(_mask(a) for a in self.adj_v))

    @classmethod
    def from_edges(cls, n_u: int, n_v: int, edges: Iterable[tuple[int, int]],
                   u_labels=(), v_labels=()) -> "BipartiteGraph":
        """Build from dense ``(u, v)`` index pairs; duplicates are collapsed."""
        su: list[set[int]] = [set() for _ in range(n_u)]
        sv: list[set[int]] = [set() for _ in range(n_v)]
        for u, v in edges:
            if not (0 <= u < n_u and 0 <= v < n_v):
                raise IndexError(f"edge ({u}, {v}) outside {n_u}x{n_v}")
            su[u].add(v)
            sv[v].add(u)
        return cls(n_u, n_v,
                   tuple(tuple(sorted(s)) for s in su),
                   tuple(tuple(sorted(s)) for s in sv),
                   tuple(u_labels), tuple(v_labels))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj_u)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, a in enumerate(self.adj_u) for v in a]

    def labeled_edges(self) -> list[tuple[int, int]]:
        ul, vl = self.u_labels, self.v_labels
        return sorted((ul[u], vl[v]) for u, v in self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.mask_u[u] >> v & 1)

    def swapped(self) -> "BipartiteGraph":
        """The same graph with the roles of U and V exchanged."""
        return BipartiteGraph(self.n_v, self.n_u, self.adj_v, self.adj_u,
                              self.v_labels, self.u_labels)

    def __eq__(self, other):
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.n_u, self.n_v, self.adj_u, self.adj_v) == (
            other.n_u, other.n_v, other.adj_u, other.adj_v)

    def __hash__(self):
        return hash((self.n_u, self.n_v, self.adj_u))

    def __repr__(self):
        return f"BipartiteGraph(n_u={self.n_u}, n_v={self.n_v}, m={self.m})"


def load_edge_list(stream: TextIO | Iterable[str], swap_sides: bool = False) -> BipartiteGraph:
    """Parse a KONECT-style edge list.

    Each non-comment line holds two non-negative integer labels ``u v``
    (extra columns such as weights or timestamps are rejected).  Lines that
    start with ``%`` or ``#`` and blank lines are skipped.  Labels are
    compacted per side to dense indices in first-appearance order.
    """
    u_ids: dict[int, int] = {}
    v_ids: dict[int, int] = {}
    pairs: list[tuple[int, int]] = []
    for lineno, line in enumerate(stream, 1):
        s = line.strip()
        if not s or s[0] in "%#":
            continue
        tok = s.split()
        if len(tok) != 2:
            raise EdgeListParseError(lineno, line.rstrip("\n"), f"expected 2 columns, got {len(tok)}")
        try:
            a, b = int(tok[0]), int(tok[1])
        except ValueError:
            raise EdgeListParseError(lineno, line.rstrip("\n"), "non-integer token") from None
        if a < 0 or b < 0:
            raise EdgeListParseError(lineno, line.rstrip("\n"), "negative label")
        if swap_sides:
            a, b = b, a
        u = u_ids.setdefault(a, len(u_ids))
        v = v_ids.setdefault(b, len(v_ids))
        pairs.append((u, v))
    return BipartiteGraph.from_edges(len(u_ids), len(v_ids), pairs,
                                     tuple(u_ids), tuple(v_ids))


def dump_edge_list(g: BipartiteGraph, out: TextIO) -> None:
    """Write the canonical edge list: original labels, sorted by label pair.

    Sorting by label (not dense index) makes dump -> load -> dump a fixed
    point regardless of the first-appearance compaction.
    """
    for a, b in g.labeled_edges():
        out.write(f"{a} {b}\n")


def neighbors(g: BipartiteGraph, x: VertexId) -> tuple[int, ...]:
    side, i = x
    adj = g.adj_u if side is Side.U else g.adj_v
    if not 0 <= i < len(adj):
        raise IndexError(f"{side.value}{i} out of range")
    return adj[i]


def two_hop_degrees(g: BipartiteGraph) -> list[int]:
    """Number of distinct other U-vertices sharing at least one neighbour."""
    out = []
    for u in range(g.n_u):
        reach = 0
        for v in g.adj_u[u]:
            reach |= g.mask_v[v]
        out.append(reach.bit_count() - (1 if reach >> u & 1 else 0))
    return out


def two_hop_order(g: BipartiteGraph) -> list[int]:
    """U-indices by ascending 2-hop degree, ties by ascending index."""
    deg = two_hop_degrees(g)
    return sorted(range(g.n_u), key=lambda u: (deg[u], u))
