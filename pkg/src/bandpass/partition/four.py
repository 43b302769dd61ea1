"""Split a 2-matching into four matchings, each acyclic alongside M1.

X0 and X1 come from a backtracking 3-colouring (X0 / X1 / rest) of the edges
of every path and cycle, walked in order.  Adjacent edges never share a
colour, so X0, X1 and the rest Y are matchings; X0 and X1 grow only through
union-find checks against M1; and a path's end edge is never put in Y, so
X0 + X1 touches every vertex.  Then each cycle of M1 + Y loses one marked Y
edge (its lightest) to X3, leaving X2.
"""

from __future__ import annotations

import sys

from ..edges import Edge, InvariantError, Matching, components_2matching, degrees, norm, walk_edges
from ..unionfind import RollbackUnionFind
from .result import PartitionError, PartitionResult, cycles_with

REST = 2
DEFAULT_BUDGET = 2_000_000


def _check_disjoint(edges, m1: Matching) -> None:
    shared = set(edges) & set(m1.edges)
    if shared:
        raise PartitionError(f"edges shared with M1: {sorted(shared)}")


def colour_two_matching(edges, m1: Matching, budget: int = DEFAULT_BUDGET) -> dict[Edge, int]:
    """Assign 0, 1 or ``REST`` to every edge of a 2-matching.

    Raises InvariantError if the search exhausts ``budget`` nodes; for small
    inputs it is exhaustive, so that would mean no split exists.
    """
    comps = components_2matching(edges)
    order: list[Edge] = []
    neighbours: list[list[int]] = []  # earlier positions sharing a vertex
    for walk, cyc in comps:
        es = walk_edges(walk, cyc)
        start = len(order)
        for k, e in enumerate(es):
            nb = [start + k - 1] if k else []
            if cyc and k == len(es) - 1 and k >= 2:
                nb.append(start)
            order.append(e)
            neighbours.append(nb)
    cdeg = degrees(order)
    dsu = [RollbackUnionFind(), RollbackUnionFind()]
    for u, v in m1.edges:
        dsu[0].union(u, v)
        dsu[1].union(u, v)
    colour: list[int | None] = [None] * len(order)
    nodes = 0

    def preference(idx: int) -> list[int]:
        nb = neighbours[idx]
        if not nb or idx == 0 or nb[0] != idx - 1:
            return [0, 1, REST]
        prev = colour[idx - 1]
        if prev != REST:
            return [1 - prev, REST]
        before = colour[idx - 2] if idx >= 2 and neighbours[idx - 1] and neighbours[idx - 1][0] == idx - 2 else 1
        return [1 - before, before]

    def search(idx: int) -> bool:
        nonlocal nodes
        if idx == len(order):
            return True
        nodes += 1
        if nodes > budget:
            raise InvariantError("X0/X1 colouring search exceeded its node budget")
        u, v = order[idx]
        taken = {colour[j] for j in neighbours[idx]}
        for col in preference(idx):
            if col in taken:
                continue
            if col == REST:
                if cdeg[u] == 1 or cdeg[v] == 1:
                    continue
            elif not dsu[col].union(u, v, tag=(u, v)):
                dsu[col].rollback()
                continue
            colour[idx] = col
            if search(idx + 1):
                return True
            colour[idx] = None
            if col != REST:
                dsu[col].rollback()
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(order) + 1000))
    try:
        if not search(0):
            raise InvariantError("no X0/X1 split exists for this 2-matching and M1")
    finally:
        sys.setrecursionlimit(limit)
    return dict(zip(order, colour))  # type: ignore[arg-type]


def _edge_weight(weights, e: Edge) -> int:
    return 1 if weights is None else int(weights[e[0]][e[1]])


def mark_cycles(m1: Matching, rest: frozenset[Edge], weights=None) -> frozenset[Edge]:
    """Lightest ``rest`` edge of every cycle of M1 + rest (ties: smallest edge)."""
    marked = set()
    for walk in cycles_with(m1, rest):
        cand = [e for e in walk_edges(walk, True) if e in rest]
        marked.add(min(cand, key=lambda e: (_edge_weight(weights, e), e)))
    return frozenset(marked)


def partition_into_four(c, m1: Matching, weights=None, budget: int = DEFAULT_BUDGET) -> PartitionResult:
    """X0..X3 with every M1 + Xj a set of disjoint paths.

    ``c`` is a BMatching (b = 2) or any iterable of edges with degrees <= 2.
    ``weights`` only decides which cycle edge gets marked into X3.
    """
    edges = frozenset(norm(u, v) for u, v in getattr(c, "edges", c))
    if any(d > 2 for d in degrees(edges).values()):
        raise PartitionError("input is not a 2-matching")
    _check_disjoint(edges, m1)
    colour = colour_two_matching(edges, m1, budget)
    x0 = frozenset(e for e, col in colour.items() if col == 0)
    x1 = frozenset(e for e, col in colour.items() if col == 1)
    rest = frozenset(e for e, col in colour.items() if col == REST)
    x3 = mark_cycles(m1, rest, weights)
    parts = {"X0": x0, "X1": x1, "X2": rest - x3, "X3": x3}
    return PartitionResult(parts, m1, ("X0", "X1", "X2", "X3"))
