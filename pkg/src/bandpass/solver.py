"""The four-step approximation pipeline for Bandpass-2.

1. M1: maximum-weight perfect matching on the static row graph G.
2. Zero M1's bandpasses to get the residual graph G'; take a maximum
   4-matching of G', split it into two 2-matchings and then into matchings
   with property (P); the heaviest part is candidate A.
3. Hamiltonian path in G' (minus any M1 edges), split into three matchings;
   the heaviest is candidate B.
4. M2 = heavier candidate; stack the paths of M1 + M2 into a permutation.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .edges import Edge, InvariantError, Matching, components_2matching
from .graph import build_graph, matching_bandpasses, residual_instance
from .hampath import EXACT_CAP, ham_path
from .instance import Instance, Permutation, bandpass_count, pad_even
from .matching import decompose_4matching, max_weight_bmatching, max_weight_matching
from .partition import partition_acyclic_into_three, partition_pair_with_property_p

GUARANTEE = Fraction(426, 227)


@dataclass(frozen=True)
class SolveOptions:
    ham: str = "auto"            # exact | heuristic | auto
    exact_cap: int = EXACT_CAP
    seed: int = 0                # accepted for interface symmetry; the pipeline is deterministic


@dataclass
class SolveReport:
    permutation: Permutation
    bandpasses: int
    w_m1: int
    w_m2: int
    branch: str                  # "4-matching" or "ham-path"
    m2_label: str
    candidate_weights: dict[str, int]
    component_qualities: dict[str, float]
    ratio_bound: float
    timings: dict[str, float] = field(default_factory=dict)
    m1: tuple[Edge, ...] = ()
    m2: tuple[Edge, ...] = ()
    problematic_pairs_resolved: int = 0
    parts: dict[str, tuple[Edge, ...]] = field(default_factory=dict)

    def to_dict(self, with_parts: bool = False) -> dict:
        d = asdict(self)
        d["permutation"] = [i + 1 for i in self.permutation.order]
        for key in ("m1", "m2"):
            d[key] = [[u + 1, v + 1] for u, v in getattr(self, key)]
        if with_parts:
            d["parts"] = {lab: [[u + 1, v + 1] for u, v in es] for lab, es in self.parts.items()}
        else:
            del d["parts"]
        return d


def stack_paths(m1: Matching, m2: Matching | frozenset, n: int | None = None) -> Permutation:
    """Concatenate the paths of M1 + M2 into one row order.

    Components are ordered by their smallest row and walked from the
    lower-indexed endpoint; rows touched by neither matching follow as
    singletons in index order.
    """
    n = m1.n if n is None else n
    m2_edges = getattr(m2, "edges", m2)
    union = list(m1.edges) + list(m2_edges)
    if len(set(union)) != len(union):
        raise InvariantError("M1 and M2 share an edge (2-cycle)")
    comps = components_2matching(union)
    if any(cyc for _, cyc in comps):
        raise InvariantError("M1 + M2 contains a cycle; cannot stack")
    pieces = [walk if walk[0] < walk[-1] else walk[::-1] for walk, _ in comps]
    covered = {v for p in pieces for v in p}
    pieces += [[v] for v in range(n) if v not in covered]
    pieces.sort(key=min)
    return Permutation(tuple(v for p in pieces for v in p))


def ratio_bound(path_quality: float) -> float:
    """Worst-case ratio certified by the analysis for a given path quality.

    The analysis mixes two lower bounds on the output with weights x, y in
    [0, 1]; the ratio is 1 / max_{x,y} min(y/2 + c(x, y), 3y/4), where c is the
    smallest per-group coefficient.  Solved as a 3-variable LP.
    """
    from scipy.optimize import linprog

    q = float(path_quality)
    # variables (x, y, t, s): maximise t with s <= each group coefficient
    # and t <= y/2 + s, t <= 3y/4
    A, b = [], []
    A.append([0, 1, 0, 1]);            b.append(1)             # s <= 1 - y
    A.append([-1 / 15, 0.5, 0, 1]);    b.append(0.5)           # s <= (1-y)/2 + x/15
    A.append([0, 2 / 3, 0, 1]);        b.append(2 / 3)         # s <= 2(1-y)/3
    A.append([q / 3, 0, 0, 1]);        b.append(q / 3)         # s <= q(1-x)/3
    A.append([0, -0.5, 1, -1]);        b.append(0)             # t <= y/2 + s
    A.append([0, -0.75, 1, 0]);        b.append(0)             # t <= 3y/4
    res = linprog([0, 0, -1, 0], A_ub=A, b_ub=b,
                  bounds=[(0, 1), (0, 1), (None, None), (None, None)], method="highs")
    return 1.0 / res.x[2]


def _residual_weight(w: np.ndarray, edges) -> int:
    return int(sum(w[u, v] for u, v in edges))


def solve(inst: Instance, options: SolveOptions | None = None) -> SolveReport:
    opts = options or SolveOptions()
    timings: dict[str, float] = {}
    clock = time.perf_counter()

    def lap(name):
        nonlocal clock
        now = time.perf_counter()
        timings[name] = now - clock
        clock = now

    work = pad_even(inst)
    g = build_graph(work)
    m1 = max_weight_matching(g)
    w_m1 = m1.weight(g.weight)
    lap("m1")

    res = residual_instance(work, matching_bandpasses(work, m1))
    gr = build_graph(res)
    wr = gr.weight
    if any(wr[u, v] for u, v in m1.edges):
        raise InvariantError("residual weight of an M1 edge is not zero")
    lap("residual")

    four = max_weight_bmatching(gr, 4)
    c1, c2 = decompose_4matching(four)
    xres, yres, cert = partition_pair_with_property_p(c1, c2, m1, wr)
    if not cert.ok:
        raise InvariantError(f"property (P) certificate failed: {cert.failed()}")
    cand_a = max(((lab, parts) for r in (xres, yres) for lab, parts in r.parts.items()),
                 key=lambda lp: _residual_weight(wr, lp[1]))
    lap("four_matching_branch")

    hp = ham_path(gr, opts.ham, opts.exact_cap)
    path_edges = {tuple(sorted(e)) for e in zip(hp.path, hp.path[1:])} - set(m1.edges)
    yparts = partition_acyclic_into_three(path_edges, m1)
    cand_b = max(yparts.parts.items(), key=lambda lp: _residual_weight(wr, lp[1]))
    lap("ham_path_branch")

    wa, wb = _residual_weight(wr, cand_a[1]), _residual_weight(wr, cand_b[1])
    if wa >= wb:
        branch, (label, m2) = "4-matching", cand_a
    else:
        branch, (label, m2) = "ham-path", cand_b
    w_m2 = max(wa, wb)

    perm = stack_paths(m1, m2, work.n)
    if work.n != inst.n:
        perm = Permutation(tuple(v for v in perm.order if v < inst.n))
    b = bandpass_count(inst, perm)
    lap("stack")
    if b < w_m1 + w_m2:
        raise InvariantError(f"b(pi) = {b} < w(M1) + w'(M2) = {w_m1 + w_m2}")

    qualities = {"matching": 1.0, "b_matching": 1.0, "ham_path": hp.quality}
    return SolveReport(
        permutation=perm,
        bandpasses=b,
        w_m1=w_m1,
        w_m2=w_m2,
        branch=branch,
        m2_label=label,
        candidate_weights={"4-matching": wa, "ham-path": wb},
        component_qualities=qualities,
        ratio_bound=ratio_bound(min(hp.quality, 1.0)),
        timings=timings,
        m1=tuple(sorted(m1.edges)),
        m2=tuple(sorted(m2)),
        problematic_pairs_resolved=cert.problematic_pairs_resolved,
        parts={f"{br}/{lab}": tuple(sorted(es))
               for br, r in (("4-matching", xres), ("4-matching", yres), ("ham-path", yparts))
               for lab, es in r.parts.items()},
    )
