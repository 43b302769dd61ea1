"""Edge-set containers and the structural checks shared by every module."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

Edge = tuple[int, int]


class InvariantError(RuntimeError):
    """An internal structural guarantee was broken."""


def norm(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at {u}")
    return (u, v) if u < v else (v, u)


def norm_all(edges: Iterable[Edge]) -> frozenset[Edge]:
    return frozenset(norm(u, v) for u, v in edges)


def degrees(edges: Iterable[Edge]) -> dict[int, int]:
    deg: dict[int, int] = defaultdict(int)
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return dict(deg)


def adjacency(edges: Iterable[Edge]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = defaultdict(list)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def is_matching(edges: Iterable[Edge]) -> bool:
    return all(d <= 1 for d in degrees(edges).values())


def is_acyclic_2matching(*edge_sets: Iterable[Edge]) -> bool:
    """True iff the multigraph union of ``edge_sets`` is a set of disjoint paths.

    Parallel edges (the same pair in two sets) count as a 2-cycle.
    """
    merged: list[Edge] = [e for s in edge_sets for e in s]
    if any(d > 2 for d in degrees(merged).values()):
        return False
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in merged:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def components_2matching(edges: Iterable[Edge]) -> list[tuple[list[int], bool]]:
    """Split a max-degree-2 edge set into (vertex walk, is_cycle) components.

    Paths are walked from their smaller endpoint; cycles from their smallest
    vertex toward its smaller neighbour.  Raises if some degree exceeds 2.
    """
    edges = list(edges)
    adj = adjacency(edges)
    if any(len(nb) > 2 for nb in adj.values()):
        raise InvariantError("edge set is not a 2-matching")
    for nb in adj.values():
        nb.sort()
    seen: set[int] = set()
    out: list[tuple[list[int], bool]] = []

    def walk(start):
        order = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = [w for w in adj[cur] if w != prev and w not in seen]
            if not nxt:
                return order
            prev, cur = cur, nxt[0]
            seen.add(cur)
            order.append(cur)

    for v in sorted(v for v in adj if len(adj[v]) == 1):
        if v not in seen:
            out.append((walk(v), False))
    for v in sorted(adj):
        if v not in seen:
            out.append((walk(v), True))
    return out


def walk_edges(walk: list[int], is_cycle: bool) -> list[Edge]:
    es = [norm(a, b) for a, b in zip(walk, walk[1:])]
    if is_cycle:
        es.append(norm(walk[-1], walk[0]))
    return es


@dataclass(frozen=True)
class Matching:
    """Vertex-disjoint edges on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        object.__setattr__(self, "edges", norm_all(self.edges))
        if not is_matching(self.edges):
            raise InvariantError("edges do not form a matching")
        if any(not (0 <= u < self.n and 0 <= v < self.n) for u, v in self.edges):
            raise ValueError("matching edge out of range")

    def weight(self, weights) -> int:
        return int(sum(weights[u][v] for u, v in self.edges))

    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u], out[v] = v, u
        return out

    def is_perfect(self) -> bool:
        return 2 * len(self.edges) == self.n


@dataclass(frozen=True)
class BMatching:
    """Simple subgraph with every degree at most ``b``."""

    n: int
    edges: frozenset[Edge]
    b: int

    def __post_init__(self):
        object.__setattr__(self, "edges", norm_all(self.edges))
        if any(d > self.b for d in degrees(self.edges).values()):
            raise InvariantError(f"degree bound {self.b} violated")

    def weight(self, weights) -> int:
        return int(sum(weights[u][v] for u, v in self.edges))
