"""Split an acyclic 2-matching into three matchings, each acyclic alongside M1.

The paths are first chained into one path that avoids M1 edges, then the
path edges are placed in order.  Edge ``e_j`` goes to one of the two parts
not holding ``e_{j-1}`` when that keeps the union with M1 acyclic; otherwise
``e_{j-1}`` is moved to the part not holding ``e_{j-2}`` and ``e_j`` takes the
part ``e_{j-1}`` left.  The last union in that part is always ``e_{j-1}``'s, so
a rollback union-find undoes it exactly.
"""

from __future__ import annotations

from ..edges import InvariantError, Matching, components_2matching, is_acyclic_2matching, norm
from ..unionfind import RollbackUnionFind
from .result import PartitionError, PartitionResult

LABELS = ("Y0", "Y1", "Y2")


def chain_paths(paths: list[list[int]], m1: Matching) -> list[int]:
    """Concatenate vertex-disjoint paths into one path containing no M1 edge.

    Components are joined end to start, flipping the next path when that
    avoids an M1 connector; any M1 edge left over is then removed by the
    endpoint re-linking sweep.
    """
    mate = m1.mate()
    if not paths:
        return []
    path = list(paths[0])
    for nxt in paths[1:]:
        if mate.get(path[-1]) == nxt[0] and mate.get(path[-1]) != nxt[-1]:
            nxt = nxt[::-1]
        path.extend(nxt)

    def in_m1(a, b):
        return mate.get(a) == b

    i = 0
    while i < len(path) - 1:
        u, v = path[i], path[i + 1]
        if in_m1(u, v):
            s, t = path[0], path[-1]
            if not in_m1(v, s):
                # drop (u, v), add (v, s): u .. s, v .. t
                path = path[i::-1] + path[i + 1:]
            elif not in_m1(u, t):
                # drop (u, v), add (u, t): s .. u, t .. v
                path = path[: i + 1] + path[:i:-1]
            else:
                raise InvariantError(f"cannot re-link M1 edge ({u}, {v}) on path {path}")
        i += 1
    if any(in_m1(a, b) for a, b in zip(path, path[1:])):
        raise InvariantError("chained path still contains an M1 edge")
    return path


def partition_acyclic_into_three(p, m1: Matching) -> PartitionResult:
    """Y0, Y1, Y2 partitioning ``p`` with every M1 + Yj a set of disjoint paths."""
    edges = frozenset(norm(u, v) for u, v in getattr(p, "edges", p))
    if not is_acyclic_2matching(edges):
        raise PartitionError("input must be an acyclic 2-matching (disjoint paths)")
    if edges & m1.edges:
        raise PartitionError(f"edges shared with M1: {sorted(edges & m1.edges)}")
    if not edges:
        return PartitionResult({lab: frozenset() for lab in LABELS}, m1, LABELS)

    paths = [walk for walk, _ in components_2matching(edges)]
    path = chain_paths(paths, m1)
    seq = [norm(a, b) for a, b in zip(path, path[1:])]

    where: list[int] = []
    dsu = [RollbackUnionFind() for _ in LABELS]
    for d in dsu:
        for u, v in m1.edges:
            d.union(u, v)

    def place(j: int, k: int) -> bool:
        a, b = path[j], path[j + 1]
        if dsu[k].connected(a, b):
            return False
        dsu[k].union(a, b, tag=j)
        return True

    for j in range(len(seq)):
        if j < 3:
            if not place(j, j):
                raise InvariantError(f"edge {seq[j]} closes a cycle with M1 alone")
            where.append(j)
            continue
        b = where[j - 1]
        others = [k for k in range(3) if k != b]
        target = next((k for k in others if place(j, k)), None)
        if target is not None:
            where.append(target)
            continue
        # both other parts already link v_j and v_{j+1}: shift e_{j-1} away
        dest = others[1] if where[j - 2] == others[0] else others[0]
        if dsu[b].rollback() != j - 1:
            raise InvariantError("union-find history out of step with the path")
        if not place(j - 1, dest):
            raise InvariantError(f"moving e_{j - 1} to {LABELS[dest]} would close a cycle")
        where[j - 1] = dest
        if not place(j, b):
            raise InvariantError(f"e_{j} still closes a cycle in {LABELS[b]}")
        where.append(b)

    parts = {lab: frozenset(e for e, k in zip(seq, where) if k == i and e in edges)
             for i, lab in enumerate(LABELS)}
    return PartitionResult(parts, m1, LABELS)
