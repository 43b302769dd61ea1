"""Maximum-weight matching in general graphs (Edmonds' blossom method).

Primal-dual implementation in the O(n^3) style of Galil: one augmentation
per stage, each stage growing alternating trees from every free vertex and
adjusting duals until an augmenting path appears or no improvement remains.

Endpoints are numbered ``2k`` and ``2k + 1`` for edge ``k``; ``p ^ 1`` is the
opposite endpoint of the same edge.  Blossom ids are ``n .. 2n-1``.
Weights are doubled internally so every dual stays integral.
"""

from __future__ import annotations

from typing import Sequence


class _Solver:
    # label values for top-level blossoms
    FREE, S, T, BREADCRUMB = 0, 1, 2, 5

    def __init__(self, nvertex: int, edges: Sequence[tuple[int, int, int]]):
        self.n = nvertex
        self.edges = [(i, j, 2 * int(w)) for i, j, w in edges]
        n = nvertex
        self.endpoint = [v for i, j, _ in self.edges for v in (i, j)]
        self.neighbend: list[list[int]] = [[] for _ in range(n)]
        for k, (i, j, _) in enumerate(self.edges):
            self.neighbend[i].append(2 * k + 1)
            self.neighbend[j].append(2 * k)
        maxw = max((w for _, _, w in self.edges), default=0)
        self.mate = [-1] * n
        self.label = [0] * (2 * n)
        self.labelend = [-1] * (2 * n)
        self.inblossom = list(range(n))
        self.parent = [-1] * (2 * n)
        self.childs: list[list[int] | None] = [None] * (2 * n)
        self.base = list(range(n)) + [-1] * n
        self.endps: list[list[int] | None] = [None] * (2 * n)
        self.bestedge = [-1] * (2 * n)
        self.bestlist: list[list[int] | None] = [None] * (2 * n)
        self.unused = list(range(n, 2 * n))
        self.dual = [maxw] * n + [0] * n
        self.allowed = [False] * len(self.edges)
        self.queue: list[int] = []

    def slack(self, k: int) -> int:
        i, j, w = self.edges[k]
        return self.dual[i] + self.dual[j] - 2 * w

    def leaves(self, b: int):
        if b < self.n:
            yield b
            return
        for t in self.childs[b]:
            if t < self.n:
                yield t
            else:
                yield from self.leaves(t)

    def assign_label(self, w: int, t: int, p: int) -> None:
        b = self.inblossom[w]
        assert self.label[w] == 0 and self.label[b] == 0
        self.label[w] = self.label[b] = t
        self.labelend[w] = self.labelend[b] = p
        self.bestedge[w] = self.bestedge[b] = -1
        if t == self.S:
            self.queue.extend(self.leaves(b))
        else:
            base = self.base[b]
            assert self.mate[base] >= 0
            self.assign_label(self.endpoint[self.mate[base]], self.S, self.mate[base] ^ 1)

    def scan_blossom(self, v: int, w: int) -> int:
        """Walk both tree paths upward; return the common base or -1."""
        path = []
        base = -1
        while v != -1 or w != -1:
            b = self.inblossom[v]
            if self.label[b] & 4:
                base = self.base[b]
                break
            assert self.label[b] == self.S
            path.append(b)
            self.label[b] = self.BREADCRUMB
            if self.labelend[b] == -1:
                v = -1
            else:
                v = self.endpoint[self.labelend[b]]
                b = self.inblossom[v]
                assert self.label[b] == self.T
                v = self.endpoint[self.labelend[b]]
            if w != -1:
                v, w = w, v
        for b in path:
            self.label[b] = self.S
        return base

    def add_blossom(self, base: int, k: int) -> None:
        v, w, _ = self.edges[k]
        bb = self.inblossom[base]
        bv = self.inblossom[v]
        bw = self.inblossom[w]
        b = self.unused.pop()
        self.base[b] = base
        self.parent[b] = -1
        self.parent[bb] = b
        path: list[int] = []
        endps: list[int] = []
        while bv != bb:
            self.parent[bv] = b
            path.append(bv)
            endps.append(self.labelend[bv])
            v = self.endpoint[self.labelend[bv]]
            bv = self.inblossom[v]
        path.append(bb)
        path.reverse()
        endps.reverse()
        endps.append(2 * k)
        while bw != bb:
            self.parent[bw] = b
            path.append(bw)
            endps.append(self.labelend[bw] ^ 1)
            w = self.endpoint[self.labelend[bw]]
            bw = self.inblossom[w]
        self.childs[b] = path
        self.endps[b] = endps
        self.label[b] = self.S
        self.labelend[b] = self.labelend[bb]
        self.dual[b] = 0
        for leaf in self.leaves(b):
            if self.label[self.inblossom[leaf]] == self.T:
                self.queue.append(leaf)
            self.inblossom[leaf] = b
        # least-slack edge from the new blossom to each neighbouring S-blossom
        best_to = [-1] * (2 * self.n)
        for sub in path:
            if self.bestlist[sub] is None:
                lists = [[p // 2 for p in self.neighbend[leaf]] for leaf in self.leaves(sub)]
            else:
                lists = [self.bestlist[sub]]
            for lst in lists:
                for kk in lst:
                    i, j, _ = self.edges[kk]
                    if self.inblossom[j] == b:
                        i, j = j, i
                    bj = self.inblossom[j]
                    if (bj != b and self.label[bj] == self.S
                            and (best_to[bj] == -1 or self.slack(kk) < self.slack(best_to[bj]))):
                        best_to[bj] = kk
            self.bestlist[sub] = None
            self.bestedge[sub] = -1
        self.bestlist[b] = [kk for kk in best_to if kk != -1]
        self.bestedge[b] = -1
        for kk in self.bestlist[b]:
            if self.bestedge[b] == -1 or self.slack(kk) < self.slack(self.bestedge[b]):
                self.bestedge[b] = kk

    def expand_blossom(self, b: int, endstage: bool) -> None:
        for s in self.childs[b]:
            self.parent[s] = -1
            if s < self.n:
                self.inblossom[s] = s
            elif endstage and self.dual[s] == 0:
                self.expand_blossom(s, endstage)
            else:
                for leaf in self.leaves(s):
                    self.inblossom[leaf] = s
        if not endstage and self.label[b] == self.T:
            # relabel the even-length path from the entry child to the base
            childs = self.childs[b]
            endps = self.endps[b]
            entry = self.inblossom[self.endpoint[self.labelend[b] ^ 1]]
            j = childs.index(entry)
            if j & 1:
                j -= len(childs)
                jstep, trick = 1, 0
            else:
                jstep, trick = -1, 1
            p = self.labelend[b]
            while j != 0:
                self.label[self.endpoint[p ^ 1]] = 0
                self.label[self.endpoint[endps[j - trick] ^ trick ^ 1]] = 0
                self.assign_label(self.endpoint[p ^ 1], self.T, p)
                self.allowed[endps[j - trick] // 2] = True
                j += jstep
                p = endps[j - trick] ^ trick
                self.allowed[p // 2] = True
                j += jstep
            bv = childs[j]
            self.label[self.endpoint[p ^ 1]] = self.label[bv] = self.T
            self.labelend[self.endpoint[p ^ 1]] = self.labelend[bv] = p
            self.bestedge[bv] = -1
            j += jstep
            while childs[j] != entry:
                bv = childs[j]
                if self.label[bv] == self.S:
                    j += jstep
                    continue
                labelled = -1
                for leaf in self.leaves(bv):
                    if self.label[leaf] != 0:
                        labelled = leaf
                        break
                if labelled != -1:
                    assert self.label[labelled] == self.T and self.inblossom[labelled] == bv
                    self.label[labelled] = 0
                    self.label[self.endpoint[self.mate[self.base[bv]]]] = 0
                    self.assign_label(labelled, self.T, self.labelend[labelled])
                j += jstep
        self.label[b] = self.labelend[b] = -1
        self.childs[b] = self.endps[b] = None
        self.base[b] = -1
        self.bestlist[b] = None
        self.bestedge[b] = -1
        self.unused.append(b)

    def augment_blossom(self, b: int, v: int) -> None:
        """Rotate blossom ``b`` so that leaf ``v`` becomes its base."""
        t = v
        while self.parent[t] != b:
            t = self.parent[t]
        if t >= self.n:
            self.augment_blossom(t, v)
        childs = self.childs[b]
        endps = self.endps[b]
        i = j = childs.index(t)
        if i & 1:
            j -= len(childs)
            jstep, trick = 1, 0
        else:
            jstep, trick = -1, 1
        while j != 0:
            j += jstep
            t = childs[j]
            p = endps[j - trick] ^ trick
            if t >= self.n:
                self.augment_blossom(t, self.endpoint[p])
            j += jstep
            t = childs[j]
            if t >= self.n:
                self.augment_blossom(t, self.endpoint[p ^ 1])
            self.mate[self.endpoint[p]] = p ^ 1
            self.mate[self.endpoint[p ^ 1]] = p
        self.childs[b] = childs[i:] + childs[:i]
        self.endps[b] = endps[i:] + endps[:i]
        self.base[b] = self.base[self.childs[b][0]]
        assert self.base[b] == v

    def augment_matching(self, k: int) -> None:
        v, w, _ = self.edges[k]
        for s, p in ((v, 2 * k + 1), (w, 2 * k)):
            while True:
                bs = self.inblossom[s]
                assert self.label[bs] == self.S
                if bs >= self.n:
                    self.augment_blossom(bs, s)
                self.mate[s] = p
                if self.labelend[bs] == -1:
                    break
                t = self.endpoint[self.labelend[bs]]
                bt = self.inblossom[t]
                assert self.label[bt] == self.T
                s = self.endpoint[self.labelend[bt]]
                j = self.endpoint[self.labelend[bt] ^ 1]
                assert self.base[bt] == t
                if bt >= self.n:
                    self.augment_blossom(bt, j)
                self.mate[j] = self.labelend[bt]
                p = self.labelend[bt] ^ 1

    def stage(self) -> bool:
        n = self.n
        self.label = [0] * (2 * n)
        self.bestedge = [-1] * (2 * n)
        for b in range(n, 2 * n):
            self.bestlist[b] = None
        self.allowed = [False] * len(self.edges)
        self.queue = []
        for v in range(n):
            if self.mate[v] == -1 and self.label[self.inblossom[v]] == 0:
                self.assign_label(v, self.S, -1)

        while True:
            while self.queue:
                v = self.queue.pop()
                assert self.label[self.inblossom[v]] == self.S
                for p in self.neighbend[v]:
                    k = p // 2
                    w = self.endpoint[p]
                    if self.inblossom[v] == self.inblossom[w]:
                        continue
                    if not self.allowed[k]:
                        kslack = self.slack(k)
                        if kslack <= 0:
                            self.allowed[k] = True
                    if self.allowed[k]:
                        bw = self.inblossom[w]
                        if self.label[bw] == 0:
                            self.assign_label(w, self.T, p ^ 1)
                        elif self.label[bw] == self.S:
                            base = self.scan_blossom(v, w)
                            if base >= 0:
                                self.add_blossom(base, k)
                            else:
                                self.augment_matching(k)
                                return True
                        elif self.label[w] == 0:
                            self.label[w] = self.T
                            self.labelend[w] = p ^ 1
                    elif self.label[self.inblossom[w]] == self.S:
                        b = self.inblossom[v]
                        if self.bestedge[b] == -1 or kslack < self.slack(self.bestedge[b]):
                            self.bestedge[b] = k
                    elif self.label[w] == 0:
                        if self.bestedge[w] == -1 or kslack < self.slack(self.bestedge[w]):
                            self.bestedge[w] = k

            # no augmenting path yet: choose the dual adjustment
            deltatype = 1
            delta = min(self.dual[:n])
            deltaedge = deltablossom = -1
            for v in range(n):
                if self.label[self.inblossom[v]] == 0 and self.bestedge[v] != -1:
                    d = self.slack(self.bestedge[v])
                    if d < delta:
                        delta, deltatype, deltaedge = d, 2, self.bestedge[v]
            for b in range(2 * n):
                if self.parent[b] == -1 and self.label[b] == self.S and self.bestedge[b] != -1:
                    kslack = self.slack(self.bestedge[b])
                    assert kslack % 2 == 0
                    d = kslack // 2
                    if d < delta:
                        delta, deltatype, deltaedge = d, 3, self.bestedge[b]
            for b in range(n, 2 * n):
                if (self.base[b] >= 0 and self.parent[b] == -1 and self.label[b] == self.T
                        and self.dual[b] < delta):
                    delta, deltatype, deltablossom = self.dual[b], 4, b

            for v in range(n):
                lab = self.label[self.inblossom[v]]
                if lab == self.S:
                    self.dual[v] -= delta
                elif lab == self.T:
                    self.dual[v] += delta
            for b in range(n, 2 * n):
                if self.base[b] >= 0 and self.parent[b] == -1:
                    if self.label[b] == self.S:
                        self.dual[b] += delta
                    elif self.label[b] == self.T:
                        self.dual[b] -= delta

            if deltatype == 1:
                return False
            if deltatype == 2:
                self.allowed[deltaedge] = True
                i, j, _ = self.edges[deltaedge]
                if self.label[self.inblossom[i]] == 0:
                    i, j = j, i
                assert self.label[self.inblossom[i]] == self.S
                self.queue.append(i)
            elif deltatype == 3:
                self.allowed[deltaedge] = True
                i, _, _ = self.edges[deltaedge]
                assert self.label[self.inblossom[i]] == self.S
                self.queue.append(i)
            else:
                self.expand_blossom(deltablossom, False)

    def run(self) -> list[int]:
        n = self.n
        for _ in range(n):
            if not self.stage():
                break
            for b in range(n, 2 * n):
                if (self.parent[b] == -1 and self.base[b] >= 0
                        and self.label[b] == self.S and self.dual[b] == 0):
                    self.expand_blossom(b, True)
        return [self.endpoint[p] if p >= 0 else -1 for p in self.mate]


def blossom_matching(nvertex: int, edges: Sequence[tuple[int, int, int]]) -> list[int]:
    """Return ``mate`` with ``mate[v] = u`` for matched pairs and -1 otherwise.

    ``edges`` are ``(i, j, weight)`` with integer weights, ``i != j`` and at
    most one edge per vertex pair.  Non-positive edges never help and are
    ignored.
    """
    kept = [(i, j, w) for i, j, w in edges if w > 0]
    for i, j, _ in kept:
        if i == j or not (0 <= i < nvertex and 0 <= j < nvertex):
            raise ValueError(f"invalid edge ({i}, {j})")
    if not kept:
        return [-1] * nvertex
    return _Solver(nvertex, kept).run()
