"""Split a graph of maximum degree 4 into two 2-matchings.

Odd-degree vertices are tied to one virtual vertex so that every degree is
even; Euler circuits then orient each edge with in-degree = out-degree at
every vertex.  After dropping the virtual edges each vertex has at most two
out-arcs and two in-arcs.  In the bipartite "out-copy -> in-copy" graph every
node has degree <= 2, so its paths and (even) cycles 2-colour alternately;
each colour class gives every vertex at most one out-arc and one in-arc.
"""

from __future__ import annotations

from collections import defaultdict

from ..edges import Edge, InvariantError, degrees, norm


def _euler_orient(nverts: int, arcs: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Orient every edge along Euler circuits (all degrees must be even)."""
    adj: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for k, (u, v) in enumerate(arcs):
        adj[u].append((v, k))
        adj[v].append((u, k))
    for lst in adj.values():
        lst.sort(reverse=True)  # pop() takes the smallest neighbour first
    used = [False] * len(arcs)
    oriented: list[tuple[int, int] | None] = [None] * len(arcs)
    for start in sorted(adj):
        stack = [start]
        while stack:
            v = stack[-1]
            while adj[v] and used[adj[v][-1][1]]:
                adj[v].pop()
            if not adj[v]:
                stack.pop()
                continue
            w, k = adj[v].pop()
            used[k] = True
            oriented[k] = (v, w)
            stack.append(w)
    return oriented  # type: ignore[return-value]


def split_degree4(nverts: int, edges: list[Edge]) -> tuple[list[Edge], list[Edge]]:
    edges = sorted({norm(u, v) for u, v in edges})
    deg = degrees(edges)
    if any(d > 4 for d in deg.values()):
        raise InvariantError("input has a vertex of degree > 4")
    virtual = nverts
    work = list(edges) + [(v, virtual) for v in sorted(deg) if deg[v] % 2]
    arcs = _euler_orient(nverts + 1, work)[: len(edges)]

    # bipartite graph: node ("o", u) -- node ("i", v) for every arc u -> v
    badj: dict[tuple[str, int], list[int]] = defaultdict(list)
    for k, (u, v) in enumerate(arcs):
        badj[("o", u)].append(k)
        badj[("i", v)].append(k)
    colour = [-1] * len(arcs)

    def other(node, k):
        u, v = arcs[k]
        return ("i", v) if node == ("o", u) else ("o", u)

    def walk(node, k, c):
        while k is not None and colour[k] == -1:
            colour[k] = c
            c ^= 1
            node = other(node, k)
            nxt = [kk for kk in badj[node] if colour[kk] == -1]
            k = nxt[0] if nxt else None

    # paths first, from an end, then whatever is left is an even cycle
    for node in sorted(badj):
        if len(badj[node]) == 1 and colour[badj[node][0]] == -1:
            walk(node, badj[node][0], 0)
    for node in sorted(badj):
        for k in badj[node]:
            if colour[k] == -1:
                walk(node, k, 0)
    first = [edges[k] for k in range(len(edges)) if colour[k] == 0]
    second = [edges[k] for k in range(len(edges)) if colour[k] == 1]
    return first, second
