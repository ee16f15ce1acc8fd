"""Disjoint sets over dense integer ids (union by rank + path compression)."""

from __future__ import annotations


class DisjointSets:
    """
    Union-find over the elements ``0 .. n-1``.

    >>> ds = DisjointSets(4)
    >>> ds.union(0, 1), ds.union(1, 0)
    (True, False)
    >>> ds.find(1) == ds.find(0), ds.count
    (True, 3)
    """

    __slots__ = ("parent", "rank", "count")

    def __init__(self, n: int = 0):
        if n < 0:
            raise ValueError("n must be non-negative")
        self.parent = list(range(n))
        self.rank = [0] * n
        self.count = n

    def __len__(self):
        return len(self.parent)

    def find(self, i: int) -> int:
        parent = self.parent
        if not 0 <= i < len(parent):
            raise IndexError(f"element {i} out of range")
        root = i
        while parent[root] != root:
            root = parent[root]
        # path compression
        while parent[i] != root:
            parent[i], i = root, parent[i]
        return root

    def union(self, i: int, j: int) -> bool:
        ri, rj = self.find(i), self.find(j)
        if ri == rj:
            return False
        rank = self.rank
        if rank[ri] < rank[rj]:
            ri, rj = rj, ri
        self.parent[rj] = ri
        if rank[ri] == rank[rj]:
            rank[ri] += 1
        self.count -= 1
        return True

    def same(self, i: int, j: int) -> bool:
        return self.find(i) == self.find(j)

    def copy(self) -> "DisjointSets":
        other = DisjointSets()
        other.parent = self.parent.copy()
        other.rank = self.rank.copy()
        other.count = self.count
        return other

    def groups(self, members=None) -> list[list[int]]:
        """Partition of ``members`` (default: all elements), each group ascending,
        groups ordered by their smallest element."""
        if members is None:
            members = range(len(self.parent))
        by_root: dict[int, list[int]] = {}
        for i in sorted(members):
            by_root.setdefault(self.find(i), []).append(i)
        return list(by_root.values())

    def count_among(self, members) -> int:
        """Number of distinct sets touched by ``members``."""
        return len({self.find(i) for i in members})


def make(n: int) -> DisjointSets:
    return DisjointSets(n)
