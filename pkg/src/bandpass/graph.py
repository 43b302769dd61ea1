"""Static and residual row graphs.

For bandpass number 2 the bandpasses two rows can form between them are
exactly their shared-1 columns, so an edge weight is a column count.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .edges import InvariantError, Matching
from .instance import Instance, InstanceError

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class WeightedGraph:
    """Complete graph on ``n`` rows with a symmetric integer weight matrix."""

    weight: np.ndarray = field(repr=False)

    def __post_init__(self):
        w = np.asarray(self.weight, dtype=np.int64).copy()
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError("weight matrix must be square")
        if not (w == w.T).all() or (np.diag(w) != 0).any() or (w < 0).any():
            raise ValueError("weights must be symmetric, non-negative, zero on the diagonal")
        w.setflags(write=False)
        object.__setattr__(self, "weight", w)

    @property
    def n(self) -> int:
        return self.weight.shape[0]

    def edges(self, positive_only: bool = False) -> list[tuple[int, int, int]]:
        n = self.n
        return [(i, j, int(self.weight[i, j]))
                for i in range(n) for j in range(i + 1, n)
                if not positive_only or self.weight[i, j] > 0]

    def path_weight(self, order) -> int:
        return int(sum(self.weight[a, b] for a, b in zip(order, order[1:])))


@dataclass(frozen=True)
class BandpassSet:
    """Consumed (row, row, column) triples; rows stored smaller first."""

    items: frozenset[Triple]

    def __len__(self):
        return len(self.items)

    def cells(self) -> set[tuple[int, int]]:
        return {(r, c) for i, j, c in self.items for r in (i, j)}


def static_weight(inst: Instance, i: int, j: int) -> int:
    if i == j:
        raise InstanceError("static weight needs two distinct rows")
    return int(np.count_nonzero(inst.cells[i] & inst.cells[j]))


def build_graph(inst: Instance) -> WeightedGraph:
    a = inst.cells.astype(np.int64)
    w = a @ a.T
    np.fill_diagonal(w, 0)
    return WeightedGraph(w)


def matching_bandpasses(inst: Instance, matching: Matching) -> BandpassSet:
    items = set()
    for i, j in matching.edges:
        for c in np.flatnonzero(inst.cells[i] & inst.cells[j]):
            items.add((i, j, int(c)))
    return BandpassSet(frozenset(items))


def residual_instance(inst: Instance, consumed: BandpassSet) -> Instance:
    """Zero every cell used by a consumed bandpass."""
    cells = inst.cells.copy()
    for i, j, c in consumed.items:
        if not (cells[i, c] and cells[j, c]):
            raise InvariantError(f"bandpass ({i}, {j}, {c}) uses a 0 cell or a cell consumed twice")
        cells[i, c] = cells[j, c] = 0
    return Instance(cells)


def format_weights(g: WeightedGraph) -> str:
    return "\n".join(" ".join(str(int(x)) for x in row) for row in g.weight) + "\n"
