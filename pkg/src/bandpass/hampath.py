"""Maximum-weight Hamiltonian paths in the residual graph.

``ham_path_exact`` is a Held-Karp bitmask DP (quality 1).  ``ham_path_heuristic``
is a Serdyukov-style construction:

* C = maximum-weight 2-matching, M = maximum-weight matching;
* from each cycle of C move one edge into M's side, chosen so M plus the
  moved edges stays a set of paths (always possible: every cycle vertex has
  degree <= 1 on M's side, and a path has only two endpoints);
* the two path systems share the weight w(C) + w(M); keep the heavier and
  link its paths into a single Hamiltonian path.

A Hamiltonian path is itself a 2-matching and splits into two matchings, so
w(C) >= OPT and w(M) >= OPT / 2, giving weight >= 3/4 OPT for the path
problem.  That 3/4 is the declared quality.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .edges import components_2matching, walk_edges
from .graph import WeightedGraph
from .matching import max_weight_bmatching, max_weight_matching
from .unionfind import UnionFind

EXACT_CAP = 16
HEURISTIC_QUALITY = 0.75


class CapacityError(ValueError):
    """Instance too large for an exhaustive routine."""


@dataclass(frozen=True)
class HamPathResult:
    path: tuple[int, ...]
    weight: int
    quality: float
    method: str

    def validate(self, g: WeightedGraph) -> None:
        if sorted(self.path) != list(range(g.n)):
            raise AssertionError("path does not visit every vertex exactly once")
        if g.path_weight(self.path) != self.weight:
            raise AssertionError("stored path weight does not match the graph")


def ham_path_exact(g: WeightedGraph, cap: int = EXACT_CAP) -> HamPathResult:
    """Held-Karp over subsets, vectorised one popcount layer at a time.

    Ties resolve to the lowest vertex index at every step.
    """
    n = g.n
    if n > cap:
        raise CapacityError(f"exact Hamiltonian path limited to n <= {cap} (got {n}); use the heuristic")
    if n == 1:
        return HamPathResult((0,), 0, 1.0, "exact")
    w = g.weight.astype(np.int64)
    neg = np.int64(-1) << 60
    full = 1 << n
    dp = np.full((full, n), neg, dtype=np.int64)
    for v in range(n):
        dp[1 << v, v] = 0
    masks = np.arange(full, dtype=np.int64)
    popcount = np.zeros(full, dtype=np.int64)
    for v in range(n):
        popcount += (masks >> v) & 1
    for k in range(2, n + 1):
        layer = masks[popcount == k]
        for v in range(n):
            sel = layer[(layer >> v) & 1 == 1]
            prev = dp[sel ^ (1 << v)]
            dp[sel, v] = (prev + w[:, v]).max(axis=1)
    last = int(np.argmax(dp[full - 1]))
    best = int(dp[full - 1, last])
    path = [last]
    mask = full - 1
    while len(path) < n:
        v = path[-1]
        prev_mask = mask ^ (1 << v)
        u = int(np.argmax(np.where(dp[prev_mask] == dp[mask, v] - w[:, v], 1, 0)))
        path.append(u)
        mask = prev_mask
    path.reverse()
    res = HamPathResult(tuple(path), best, 1.0, "exact")
    res.validate(g)
    return res


def _link(paths: list[list[int]], w: np.ndarray) -> list[int]:
    """Join paths greedily, always attaching the next path by its better end."""
    if not paths:
        return []
    paths = sorted(paths, key=lambda p: (-len(p), min(p)))
    out = list(paths[0])
    rest = paths[1:]
    while rest:
        best = None
        for idx, p in enumerate(rest):
            for cand, gain in ((p, w[out[-1], p[0]]), (p[::-1], w[out[-1], p[-1]])):
                if best is None or gain > best[0]:
                    best = (gain, idx, cand)
        _, idx, cand = best
        out.extend(cand)
        rest.pop(idx)
    return out


def ham_path_heuristic(g: WeightedGraph) -> HamPathResult:
    n = g.n
    if n == 1:
        return HamPathResult((0,), 0, HEURISTIC_QUALITY, "heuristic")
    w = g.weight
    cover = max_weight_bmatching(g, 2)
    match = max_weight_matching(g, perfect=False)
    moved = []
    forest = UnionFind(range(n))
    for u, v in match.edges:
        forest.union(u, v)
    comps = components_2matching(cover.edges)
    for walk, cyc in comps:
        if not cyc:
            continue
        es = walk_edges(walk, True)
        pick = next((e for e in sorted(es, key=lambda e: (w[e], e))
                     if not forest.connected(*e) and e not in match.edges), None)
        if pick is None:
            raise AssertionError("no cycle edge can join the matching side")
        forest.union(*pick)
        moved.append(pick)
    side_a = [e for e in cover.edges if e not in set(moved)]
    side_b = list(match.edges) + moved
    wa = sum(int(w[e]) for e in side_a)
    wb = sum(int(w[e]) for e in side_b)
    chosen = side_a if wa >= wb else side_b
    paths = [walk for walk, cyc in components_2matching(chosen)]
    if any(cyc for _, cyc in components_2matching(chosen)):
        raise AssertionError("path system contains a cycle")
    covered = {v for p in paths for v in p}
    paths += [[v] for v in range(n) if v not in covered]
    order = _link(paths, w)
    res = HamPathResult(tuple(order), g.path_weight(order), HEURISTIC_QUALITY, "heuristic")
    res.validate(g)
    return res


def ham_path(g: WeightedGraph, mode: str = "auto", cap: int = EXACT_CAP) -> HamPathResult:
    if mode == "exact":
        return ham_path_exact(g, cap)
    if mode == "heuristic":
        return ham_path_heuristic(g)
    if mode == "auto":
        return ham_path_exact(g, cap) if g.n <= cap else ham_path_heuristic(g)
    raise ValueError(f"unknown Hamiltonian path mode {mode!r}")
