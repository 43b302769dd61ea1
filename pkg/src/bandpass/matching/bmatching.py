"""Exact maximum-weight simple b-matching by reduction to ordinary matching.

Gadget: vertex ``v`` becomes ``cap(v) = min(b, deg(v))`` copies.  Edge
``e = (u, v)`` becomes two gadget vertices ``e_u`` and ``e_v`` joined by an
edge of weight ``2K``; ``e_u`` connects to every copy of ``u`` (and ``e_v`` to
every copy of ``v``) with weight ``K + w(e)``.  With ``K`` larger than every
weight, an optimum covers every gadget vertex, so each edge gadget is either
idle (``e_u - e_v``, ``2K``) or uses ``e`` (both sides to copies, ``2K + 2w``).
A used edge consumes one copy at each end, which enforces the degree bound.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Sequence

from .blossom import blossom_matching


def bmatching_edges(nvertex: int, edges: Sequence[tuple[int, int, int]], b: int) -> list[int]:
    """Indices into ``edges`` of a maximum-weight simple b-matching.

    Zero-weight edges are never selected.
    """
    kept = [k for k, (_, _, w) in enumerate(edges) if w > 0]
    if not kept:
        return []
    deg: dict[int, int] = defaultdict(int)
    for k in kept:
        i, j, _ = edges[k]
        deg[i] += 1
        deg[j] += 1
    # edges whose both ends can never exceed b are always taken
    forced = [k for k in kept if deg[edges[k][0]] <= b and deg[edges[k][1]] <= b]
    forced_set = set(forced)
    rest = [k for k in kept if k not in forced_set]
    if not rest:
        return forced

    big = 1 + max(edges[k][2] for k in rest)
    copies: dict[int, list[int]] = {}
    nxt = 0
    for k in rest:
        for v in edges[k][:2]:
            if v not in copies:
                cap = min(b, deg[v])
                # vertices touched by forced edges lose that capacity up front
                used = sum(1 for f in forced if v in edges[f][:2])
                copies[v] = list(range(nxt, nxt + cap - used))
                nxt += cap - used
    gadget_edges: list[tuple[int, int, int]] = []
    sides: dict[int, tuple[int, int]] = {}
    for k in rest:
        i, j, w = edges[k]
        eu, ev = nxt, nxt + 1
        nxt += 2
        sides[k] = (eu, ev)
        gadget_edges.append((eu, ev, 2 * big))
        for c in copies[i]:
            gadget_edges.append((c, eu, big + w))
        for c in copies[j]:
            gadget_edges.append((c, ev, big + w))
    mate = blossom_matching(nxt, gadget_edges)
    chosen = [k for k, (eu, ev) in sides.items() if mate[eu] != ev]
    for k in chosen:
        eu, ev = sides[k]
        if mate[eu] == -1 or mate[ev] == -1:
            raise AssertionError("b-matching gadget left an edge half-used")
    return sorted(forced + chosen)
