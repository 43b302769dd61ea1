"""Joint split of two edge-disjoint 2-matchings into 7.5 effective matchings.

Both 2-matchings are first split four ways (X0..X3 and Y0..Y3).  X2 and X3
are then pooled; a length-4 cycle of M1 + pool is a *problematic pair*.
Each pair is resolved by re-placing the edges that touch its four vertices
(the only edges any resolving move needs to shift) with a backtracking
search that keeps X0, X1, Y0..Y3 acyclic matchings alongside M1, keeps the
pool a matching, and strictly lowers the number of problematic pairs.
Once none are left every cycle of M1 + pool has at least three pool edges,
so marking each cycle's lightest pool edge as X3 leaves w(X3) <= w(X2) / 2.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from ..edges import Edge, InvariantError, Matching, is_acyclic_2matching, is_matching, norm
from ..unionfind import RollbackUnionFind
from .four import mark_cycles, partition_into_four
from .result import PartitionError, PartitionResult, PropertyPCertificate, length4_cycles

POOL = "X23"
PARTS = ("X0", "X1", POOL, "Y0", "Y1", "Y2", "Y3")
CERTIFIED = ("X0", "X1", "Y0", "Y1", "Y2", "Y3")
Y_PARTS = ("Y0", "Y1", "Y2", "Y3")
SEARCH_BUDGET = 200_000


@dataclass
class _State:
    m1: Matching
    part_of: dict[Edge, str]
    first: frozenset[Edge]   # edges of the first 2-matching

    def members(self, label: str) -> set[Edge]:
        return {e for e, lab in self.part_of.items() if lab == label}

    def problematic(self) -> list[list[int]]:
        return length4_cycles(self.m1, self.members(POOL))


def _resolve(state: _State, cycle: list[int], radius: int, budget: int) -> bool:
    """Re-place edges near ``cycle`` so fewer problematic pairs remain."""
    current = len(state.problematic())
    near = set(cycle)
    for _ in range(radius - 1):
        near |= {w for e in state.part_of for w in e if near & set(e)}
    free = [e for e in state.part_of if near & set(e)]
    pool_pair = {e for e in free if state.part_of[e] == POOL and set(e) <= set(cycle)}
    free.sort(key=lambda e: (e in pool_pair, e))
    original = {e: state.part_of[e] for e in free}

    fixed = {e: lab for e, lab in state.part_of.items() if e not in original}
    deg: dict[str, dict[int, int]] = {lab: defaultdict(int) for lab in PARTS}
    dsu: dict[str, RollbackUnionFind] = {}
    for lab in CERTIFIED:
        d = RollbackUnionFind()
        for u, v in state.m1.edges:
            d.union(u, v)
        dsu[lab] = d
    for (u, v), lab in fixed.items():
        deg[lab][u] += 1
        deg[lab][v] += 1
        if lab in dsu:
            dsu[lab].union(u, v)
    pool_fixed = {e for e, lab in fixed.items() if lab == POOL}
    choice: dict[Edge, str] = {}
    nodes = 0

    def options(e: Edge) -> list[str]:
        allowed = PARTS if e in state.first else Y_PARTS
        return [original[e]] + [lab for lab in allowed if lab != original[e]]

    def search(i: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return False
        if i == len(free):
            pool = pool_fixed | {e for e, lab in choice.items() if lab == POOL}
            return len(length4_cycles(state.m1, pool)) < current
        e = free[i]
        u, v = e
        for lab in options(e):
            if deg[lab][u] or deg[lab][v]:
                continue
            if lab in dsu:
                if dsu[lab].connected(u, v):
                    continue
                dsu[lab].union(u, v, tag=e)
            deg[lab][u] += 1
            deg[lab][v] += 1
            choice[e] = lab
            if search(i + 1):
                return True
            del choice[e]
            deg[lab][u] -= 1
            deg[lab][v] -= 1
            if lab in dsu:
                dsu[lab].rollback()
        return False

    if not search(0):
        return False
    state.part_of.update(choice)
    return True


def _dump(state: _State, cycle) -> str:
    lines = [f"unresolved problematic pair on cycle {cycle}", f"M1 = {sorted(state.m1.edges)}"]
    for lab in PARTS:
        lines.append(f"{lab} = {sorted(state.members(lab))}")
    return "\n".join(lines)


def _weight(edges, weights) -> int:
    if weights is None:
        return len(edges)
    return int(sum(weights[u][v] for u, v in edges))


def partition_pair_with_property_p(c1, c2, m1: Matching, weights=None,
                                   budget: int = SEARCH_BUDGET
                                   ) -> tuple[PartitionResult, PartitionResult, PropertyPCertificate]:
    """Split ``c1`` into X0..X3 and ``c2`` into Y0..Y3 satisfying property (P).

    Resolving moves may shift an edge of ``c1`` into a Y part, so the eight
    parts jointly partition ``c1 + c2``.  Raises InvariantError (with a dump
    of the state) if a problematic pair cannot be resolved.
    """
    e1 = frozenset(norm(u, v) for u, v in getattr(c1, "edges", c1))
    e2 = frozenset(norm(u, v) for u, v in getattr(c2, "edges", c2))
    if e1 & e2:
        raise PartitionError(f"the two 2-matchings share edges {sorted(e1 & e2)}")
    xs = partition_into_four(e1, m1, weights)
    ys = partition_into_four(e2, m1, weights)

    part_of: dict[Edge, str] = {}
    for lab in ("X0", "X1"):
        part_of.update(dict.fromkeys(xs.parts[lab], lab))
    part_of.update(dict.fromkeys(xs.parts["X2"] | xs.parts["X3"], POOL))
    for lab in Y_PARTS:
        part_of.update(dict.fromkeys(ys.parts[lab.replace("Y", "X")], lab))
    state = _State(m1, part_of, e1)

    resolved = 0
    while True:
        bad = state.problematic()
        if not bad:
            break
        cycle = bad[0]
        if not (_resolve(state, cycle, 1, budget) or _resolve(state, cycle, 2, budget)):
            raise InvariantError(_dump(state, cycle))
        resolved += 1

    pool = frozenset(state.members(POOL))
    x3 = mark_cycles(m1, pool, weights)
    x_parts = {"X0": frozenset(state.members("X0")), "X1": frozenset(state.members("X1")),
               "X2": pool - x3, "X3": x3}
    y_parts = {lab: frozenset(state.members(lab)) for lab in Y_PARTS}
    xres = PartitionResult(x_parts, m1, ("X0", "X1", "X2", "X3"))
    yres = PartitionResult(y_parts, m1, Y_PARTS)
    return xres, yres, certify_property_p(xres, yres, e1 | e2, weights, resolved)


def certify_property_p(xres: PartitionResult, yres: PartitionResult, edges, weights=None,
                       resolved: int = 0) -> PropertyPCertificate:
    """Re-derive every property (P) claim by direct inspection of the parts."""
    m1 = xres.base
    parts = {**xres.parts, **yres.parts}
    flags: dict[str, bool] = {}
    for lab, es in parts.items():
        flags[f"{lab}_acyclic"] = is_acyclic_2matching(m1.edges, es)
    pool = parts["X2"] | parts["X3"]
    flags["X2_X3_matching"] = is_matching(pool)
    flags["no_length4_cycle"] = not length4_cycles(m1, pool) if flags["X2_X3_matching"] else False
    all_edges = [e for es in parts.values() for e in es]
    flags["edge_partition"] = len(all_edges) == len(set(all_edges)) and set(all_edges) == set(edges)
    w = {lab: _weight(es, weights) for lab, es in parts.items()}
    flags["marked_weight_bound"] = 2 * w["X3"] <= w["X2"]
    total = sum(w.values())
    best = max(w[lab] for lab in ("X0", "X1", "X2", "Y0", "Y1", "Y2", "Y3"))
    flags["slot_bound"] = 15 * best >= 2 * total
    return PropertyPCertificate(flags, resolved)
