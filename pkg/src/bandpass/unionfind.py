"""Disjoint sets used for acyclicity bookkeeping."""

from __future__ import annotations


class UnionFind:
    """Union by size with path compression, over arbitrary hashable items."""

    def __init__(self, items=()):
        self.parent: dict = {}
        self.size: dict = {}
        for x in items:
            self.add(x)

    def add(self, x) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x):
        self.add(x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def connected(self, a, b) -> bool:
        return self.find(a) == self.find(b)


class RollbackUnionFind:
    """Union by size without compression so the latest unions can be undone.

    ``union`` records ``tag`` (typically the edge) so callers can assert they
    are undoing what they think they are.
    """

    def __init__(self, items=()):
        self.parent: dict = {}
        self.size: dict = {}
        self.history: list = []
        for x in items:
            self.add(x)

    def add(self, x) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1

    def find(self, x):
        self.add(x)
        while self.parent[x] != x:
            x = self.parent[x]
        return x

    def connected(self, a, b) -> bool:
        return self.find(a) == self.find(b)

    def union(self, a, b, tag=None) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            self.history.append((None, None, tag))
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.history.append((ra, rb, tag))
        return True

    def rollback(self):
        """Undo the most recent union and return its tag."""
        ra, rb, tag = self.history.pop()
        if rb is not None:
            self.parent[rb] = rb
            self.size[ra] -= self.size[rb]
        return tag

    def mark(self) -> int:
        return len(self.history)

    def rollback_to(self, mark: int) -> None:
        while len(self.history) > mark:
            self.rollback()
