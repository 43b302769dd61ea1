"""Exact matching, b-matching and 4-matching decomposition on row graphs."""

from __future__ import annotations

from ..edges import BMatching, InvariantError, Matching, degrees
from ..graph import WeightedGraph
from .blossom import blossom_matching
from .bmatching import bmatching_edges
from .decompose import split_degree4

SUPPORTED_B = (2, 4)


def max_weight_matching(g: WeightedGraph, perfect: bool = True) -> Matching:
    """Maximum-weight matching; for even ``n`` padded to a perfect matching.

    Unmatched vertices are paired in increasing index order with zero-weight
    edges, which cannot lower the weight on a complete graph.
    """
    mate = blossom_matching(g.n, g.edges(positive_only=True))
    edges = {(v, u) for v, u in enumerate(mate) if u > v}
    if perfect:
        free = [v for v in range(g.n) if mate[v] == -1]
        edges |= {(free[k], free[k + 1]) for k in range(0, len(free) - 1, 2)}
    return Matching(g.n, frozenset(edges))


def max_weight_bmatching(g: WeightedGraph, b: int) -> BMatching:
    """Maximum-weight simple subgraph with all degrees <= ``b``.

    Only positive-weight edges are returned; an optimum never needs others.
    """
    if b not in SUPPORTED_B:
        raise ValueError(f"b must be one of {SUPPORTED_B}, got {b}")
    edges = g.edges(positive_only=True)
    chosen = bmatching_edges(g.n, edges, b)
    return BMatching(g.n, frozenset((edges[k][0], edges[k][1]) for k in chosen), b)


def decompose_4matching(c: BMatching) -> tuple[BMatching, BMatching]:
    if any(d > 4 for d in degrees(c.edges).values()):
        raise InvariantError("decompose_4matching needs degrees <= 4")
    first, second = split_degree4(c.n, list(c.edges))
    return BMatching(c.n, frozenset(first), 2), BMatching(c.n, frozenset(second), 2)


__all__ = [
    "BMatching",
    "Matching",
    "decompose_4matching",
    "max_weight_bmatching",
    "max_weight_matching",
]
