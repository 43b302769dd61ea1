"""Brute-force optimum and the structural checks behind the ratio proof.

Grouping of the optimum's length-2 strips against M1's bandpasses works per
column: link an optimum strip to an M1 bandpass when they share a 1-cell.
Each cell lies in at most one of each kind, so the links form paths and
cycles, and the groups follow from the component shapes:

* B1 - the strip *is* an M1 bandpass (same two cells);
* B2 - a strip, M1 bandpass, strip chain whose two strips touch nothing else;
* B4 - a strip touching no M1 bandpass (so it survives into the residual);
* B3 - every other strip that touches an M1 bandpass.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np

from .edges import Matching, norm
from .graph import build_graph, matching_bandpasses, residual_instance
from .hampath import CapacityError
from .instance import Instance, Permutation, pair_count, strip_profile
from .matching import max_weight_matching

ORACLE_CAP = 10
EXHAUSTIVE_CAP = 6

Bandpass = tuple[int, int, int]  # (row, row, column), rows ascending


@dataclass(frozen=True)
class OptimalSolution:
    perm: Permutation
    value: int
    s2: int
    profile: dict[int, int]
    maximizers: tuple[Permutation, ...] = ()


@dataclass
class GroupClassification:
    groups: dict[Bandpass, str]
    counts: dict[str, int]
    induced: list[Bandpass]                       # (i, l, column) between outer rows of B2 pairs
    induced_edges: dict[tuple[int, int], int]     # G'_s edge -> number of induced bandpasses
    residual_weights: dict[tuple[int, int], int]  # w' on the G'_s edges
    b2_m1_edges: list[tuple[int, int]]            # M1 edges whose bandpass pairs two B2 strips

    def s2(self) -> int:
        return len(self.groups)


def _score_chunk(cells: np.ndarray, perms: np.ndarray) -> np.ndarray:
    """b(pi) for a block of permutations: greedy vertical pairing per column."""
    k = perms.shape[0]
    count = np.zeros(k, dtype=np.int64)
    open_ = np.zeros((k, cells.shape[1]), dtype=bool)
    for r in range(perms.shape[1]):
        cur = cells[perms[:, r]]
        hit = cur & open_
        count += hit.sum(axis=1)
        open_ = cur & ~open_
    return count


def _canonical_blocks(n: int):
    """Permutations with first < last entry, lexicographic, in blocks."""
    if n <= 8:
        arr = np.array(list(itertools.permutations(range(n))), dtype=np.int16)
        yield arr[arr[:, 0] < arr[:, -1]] if n > 1 else arr
        return
    for first in range(n):
        rest = [v for v in range(n) if v != first]
        for second in rest:
            tail = [v for v in rest if v != second]
            body = np.array(list(itertools.permutations(tail)), dtype=np.int16)
            arr = np.empty((body.shape[0], n), dtype=np.int16)
            arr[:, 0], arr[:, 1], arr[:, 2:] = first, second, body
            yield arr[arr[:, 0] < arr[:, -1]]


def brute_force_optimum(inst: Instance, cap: int = ORACLE_CAP, all_maximizers: bool = False) -> OptimalSolution:
    """Exhaustive search over row orders up to reversal.

    The returned order is the lexicographically smallest maximiser among
    orders whose first row index is below the last.
    """
    n = inst.n
    if n > cap:
        raise CapacityError(f"brute-force oracle limited to n <= {cap} (got {n})")
    cells = inst.cells.astype(bool)
    best_val, best_perm, ties = -1, None, []
    for block in _canonical_blocks(n):
        if block.size == 0:
            continue
        scores = _score_chunk(cells, block)
        top = int(scores.max())
        if top > best_val:
            best_val = top
            best_perm = tuple(int(x) for x in block[int(np.argmax(scores))])
            ties = []
        if all_maximizers and top == best_val:
            ties.extend(tuple(int(x) for x in row) for row in block[scores == top])
    perm = Permutation(best_perm)
    profile = strip_profile(inst, perm)
    maxi = ()
    if all_maximizers:
        maxi = tuple(Permutation(t) for t in ties) + tuple(Permutation(t[::-1]) for t in ties if n > 1)
    return OptimalSolution(perm, best_val, profile.get(2, 0), profile, maxi)


def length2_strips(inst: Instance, perm: Permutation) -> list[Bandpass]:
    mat = inst.permuted(perm)
    order = perm.order
    out = []
    for c in range(inst.m):
        col = mat[:, c]
        r = 0
        while r < inst.n:
            if not col[r]:
                r += 1
                continue
            end = r
            while end + 1 < inst.n and col[end + 1]:
                end += 1
            if end == r + 1:
                a, b = norm(order[r], order[r + 1])
                out.append((a, b, c))
            r = end + 1
    return out


def classify_groups(inst: Instance, opt: OptimalSolution | Permutation, m1: Matching) -> GroupClassification:
    if m1.n != inst.n:
        raise ValueError(f"M1 is on {m1.n} vertices, instance has {inst.n} rows")
    perm = opt.perm if isinstance(opt, OptimalSolution) else opt
    strips = length2_strips(inst, perm)
    m1_bp = sorted(matching_bandpasses(inst, m1).items)
    m1_cell = {(r, bp[2]): bp for bp in m1_bp for r in bp[:2]}

    # union strips and M1 bandpasses that share a cell
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    touches: dict[Bandpass, list[Bandpass]] = {}
    for s in strips:
        hits = [m1_cell[(r, s[2])] for r in s[:2] if (r, s[2]) in m1_cell]
        touches[s] = hits
        find(("s", s))
        for m in hits:
            parent[find(("s", s))] = find(("m", m))
    members: dict = defaultdict(lambda: ([], set()))
    for s in strips:
        root = find(("s", s))
        members[root][0].append(s)
        members[root][1].update(touches[s])

    groups: dict[Bandpass, str] = {}
    induced: list[Bandpass] = []
    b2_edges: list[tuple[int, int]] = []
    for ss, ms in members.values():
        if len(ms) == 0:
            for s in ss:
                groups[s] = "B4"
        elif len(ss) == 1 and len(ms) == 1 and ss[0] in ms:
            groups[ss[0]] = "B1"
        elif len(ss) == 2 and len(ms) == 1 and all(len(touches[s]) == 1 for s in ss):
            (m,) = ms
            outer = []
            for s in ss:
                groups[s] = "B2"
                outer.append(s[0] if s[1] in m[:2] else s[1])
            i, l = norm(*outer)
            induced.append((i, l, m[2]))
            b2_edges.append((m[0], m[1]))
        else:
            for s in ss:
                groups[s] = "B3"
    counts = {lab: sum(1 for g in groups.values() if g == lab) for lab in ("B1", "B2", "B3", "B4")}
    induced_edges: dict[tuple[int, int], int] = defaultdict(int)
    for i, l, _ in induced:
        induced_edges[(i, l)] += 1
    wr = build_graph(residual_instance(inst, matching_bandpasses(inst, m1))).weight
    res_w = {e: int(wr[e]) for e in induced_edges}
    return GroupClassification(groups, counts, sorted(induced), dict(induced_edges), res_w, sorted(b2_edges))


@dataclass
class Check:
    name: str
    passed: bool
    lhs: float
    rhs: float
    detail: str = ""
    witness: list = field(default_factory=list)


def verify_inequalities(inst: Instance, opt: OptimalSolution | Permutation, m1: Matching,
                        classification: GroupClassification | None = None) -> list[Check]:
    """Evaluate every structural inequality for one (instance, optimum, M1)."""
    perm = opt.perm if isinstance(opt, OptimalSolution) else opt
    cl = classification or classify_groups(inst, perm, m1)
    g = build_graph(inst)
    w_m1 = m1.weight(g.weight)
    cnt = cl.counts
    checks: list[Check] = []

    s2 = strip_profile(inst, perm).get(2, 0)
    total = sum(cnt.values())
    checks.append(Check("group_partition", s2 == total, s2, total, "s2(pi*) = |B1|+|B2|+|B3|+|B4|"))

    rhs4 = cnt["B1"] + cnt["B2"] / 2 + 2 * cnt["B3"] / 3
    checks.append(Check("m1_group_bound", 6 * w_m1 >= 6 * cnt["B1"] + 3 * cnt["B2"] + 4 * cnt["B3"],
                        w_m1, rhs4, "w(M1) >= |B1| + |B2|/2 + 2|B3|/3"))

    p = pair_count(inst, perm)
    checks.append(Check("m1_half_pairs", 2 * w_m1 >= p, w_m1, p / 2, "w(M1) >= p(pi*)/2"))

    deg: dict[int, int] = defaultdict(int)
    for i, l in cl.induced_edges:
        deg[i] += 1
        deg[l] += 1
    worst = max(deg.values(), default=0)
    checks.append(Check("induced_degree", worst <= 4, worst, 4, "G'_s has max degree <= 4",
                        [v for v, d in deg.items() if d > 4]))

    ws = sum(cl.residual_weights.values())
    checks.append(Check("induced_weight", 2 * ws >= cnt["B2"], ws, cnt["B2"] / 2, "w'(G'_s) >= |B2|/2"))
    short = [e for e, k in cl.induced_edges.items() if cl.residual_weights[e] < k]
    checks.append(Check("induced_in_residual", not short, len(short), 0,
                        "every induced bandpass survives in G'", short))

    adj = defaultdict(set)
    for a, b in perm.adjacent_pairs():
        adj[a].add(b)
        adj[b].add(a)
    bad = [(j, k) for j, k in cl.b2_m1_edges
           if len(adj[j]) > 2 or len(adj[k]) > 2 or k in adj[j]]
    checks.append(Check("b2_edge_adjacency", not bad, len(bad), 0,
                        "B2-inducing M1 edges meet <= 2 optimum edges per end and are not optimum edges", bad))

    res = residual_instance(inst, matching_bandpasses(inst, m1)).cells
    lost = [s for s, lab in cl.groups.items() if lab == "B4" and not (res[s[0], s[2]] and res[s[1], s[2]])]
    checks.append(Check("b4_in_residual", not lost, len(lost), 0, "B4 strips survive in G'", lost))
    return checks


def verify_instance(inst: Instance, options=None, cap: int = ORACLE_CAP, exhaustive: bool = False) -> dict:
    """Solve, brute-force and check everything for one instance."""
    from .instance import pad_even
    from .solver import GUARANTEE, solve

    rep = solve(inst, options)
    work = pad_even(inst)
    opt = brute_force_optimum(work, cap, all_maximizers=exhaustive and work.n <= EXHAUSTIVE_CAP)
    m1 = max_weight_matching(build_graph(work))
    perms = list(opt.maximizers) or [opt.perm]
    checks: list[Check] = []
    for pm in perms:
        checks.extend(verify_inequalities(work, pm, m1))
    ratio = 1.0 if opt.value == rep.bandpasses == 0 else (
        float("inf") if rep.bandpasses == 0 else opt.value / rep.bandpasses)
    bound_ok = opt.value * GUARANTEE.denominator <= rep.bandpasses * GUARANTEE.numerator
    checks.append(Check("ratio_bound", bound_ok, ratio, float(GUARANTEE), "b(pi*)/b(pi) <= 426/227"))
    checks.append(Check("oracle_dominates", opt.value >= rep.bandpasses, opt.value, rep.bandpasses,
                        "b(pi*) >= b(pi)"))
    checks.append(Check("output_vs_matchings", rep.bandpasses >= rep.w_m1 + rep.w_m2, rep.bandpasses,
                        rep.w_m1 + rep.w_m2, "b(pi) >= w(M1) + w'(M2)"))
    return {
        "n": inst.n,
        "m": inst.m,
        "solver": rep.bandpasses,
        "oracle": opt.value,
        "ratio": ratio,
        "branch": rep.branch,
        "counts": classify_groups(work, opt.perm, m1).counts,
        "checks": checks,
        "report": rep,
    }
