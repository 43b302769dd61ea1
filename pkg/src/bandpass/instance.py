"""Binary-matrix instances, row permutations and their strip statistics.

Rows are 0-based in memory and 1-based in every text format.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np


class InstanceError(ValueError):
    """Malformed instance, permutation or generator argument."""


@dataclass(frozen=True)
class Instance:
    """An n x m 0/1 matrix whose rows are to be permuted."""

    cells: np.ndarray = field(repr=False)

    def __post_init__(self):
        arr = np.asarray(self.cells)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InstanceError(f"instance must be a non-empty 2-D matrix, got shape {arr.shape}")
        if not np.isin(arr, (0, 1)).all():
            raise InstanceError("instance cells must be 0 or 1")
        arr = arr.astype(np.uint8, copy=True)
        arr.setflags(write=False)
        object.__setattr__(self, "cells", arr)

    @property
    def n(self) -> int:
        return self.cells.shape[0]

    @property
    def m(self) -> int:
        return self.cells.shape[1]

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return self.cells.shape == other.cells.shape and bool((self.cells == other.cells).all())

    def __hash__(self):
        return hash((self.cells.shape, self.cells.tobytes()))

    def row(self, i: int) -> np.ndarray:
        return self.cells[i]

    def permuted(self, perm: "Permutation") -> np.ndarray:
        check_permutation(self, perm)
        return self.cells[list(perm.order)]

    @classmethod
    def from_rows(cls, rows: Iterable[str | Sequence[int]]) -> "Instance":
        """Build from strings like ``"1101"`` or integer sequences."""
        data = [[int(ch) for ch in r] for r in rows]
        if not data:
            raise InstanceError("instance needs at least one row")
        if len({len(r) for r in data}) != 1:
            raise InstanceError("all rows must have the same length")
        return cls(np.array(data, dtype=np.int64))


@dataclass(frozen=True)
class Permutation:
    """A row order ``(pi_1, ..., pi_n)``, 0-based."""

    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(x) for x in self.order)
        if sorted(order) != list(range(len(order))):
            raise InstanceError(f"not a permutation of 0..{len(order) - 1}: {order}")
        object.__setattr__(self, "order", order)

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    def adjacent_pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.order, self.order[1:]))


def check_permutation(inst: Instance, perm: Permutation) -> None:
    if len(perm) != inst.n:
        raise InstanceError(f"permutation has {len(perm)} entries, instance has {inst.n} rows")


def pad_even(inst: Instance) -> Instance:
    """Append one all-zero row when the row count is odd."""
    if inst.n % 2 == 0:
        return inst
    return Instance(np.vstack([inst.cells, np.zeros((1, inst.m), dtype=np.uint8)]))


def _column_runs(column: np.ndarray) -> list[int]:
    runs, cur = [], 0
    for bit in column:
        if bit:
            cur += 1
        elif cur:
            runs.append(cur)
            cur = 0
    if cur:
        runs.append(cur)
    return runs


def strip_profile(inst: Instance, perm: Permutation) -> dict[int, int]:
    """Map strip length -> number of maximal runs of 1s of that length.

    Length-1 strips are included; they contribute nothing to either count.
    """
    mat = inst.permuted(perm)
    counts: Counter[int] = Counter()
    for c in range(inst.m):
        counts.update(_column_runs(mat[:, c]))
    return dict(sorted(counts.items()))


def bandpass_count(inst: Instance, perm: Permutation) -> int:
    return sum(cnt * (length // 2) for length, cnt in strip_profile(inst, perm).items())


def pair_count(inst: Instance, perm: Permutation) -> int:
    return sum(cnt * (length - 1) for length, cnt in strip_profile(inst, perm).items())


def gen_random(n: int, m: int, density: float, seed: int) -> Instance:
    """Each cell is 1 independently with probability ``density``.

    Uses numpy's PCG64 bit generator seeded with ``seed`` and draws one
    ``random()`` double per cell in row-major order, so output is stable
    across platforms.
    """
    if n < 1 or m < 1:
        raise InstanceError("n and m must be positive")
    if not 0.0 <= density <= 1.0:
        raise InstanceError(f"density must lie in [0, 1], got {density}")
    rng = np.random.Generator(np.random.PCG64(seed & 0xFFFFFFFFFFFFFFFF))
    return Instance((rng.random((n, m)) < density).astype(np.uint8))


SWEEP_MS = (3, 4, 5, 6)
SWEEP_DENSITIES = (0.2, 0.5, 0.8)


@dataclass(frozen=True)
class SweepItem:
    index: int
    seed: int
    n: int
    m: int
    density: float
    instance: Instance


def gen_sweep(count: int, nmax: int = 8, seed: int = 0, nmin: int = 4):
    """Deterministic sweep over even n in [nmin, nmax], m in 3..6, three densities.

    Item ``k`` cycles through the (n, m, density) grid and draws its cells
    with seed ``seed + k``.
    """
    ns = [n for n in range(nmin, nmax + 1) if n % 2 == 0] or [nmax]
    grid = [(n, m, d) for n in ns for m in SWEEP_MS for d in SWEEP_DENSITIES]
    for k in range(count):
        n, m, d = grid[k % len(grid)]
        yield SweepItem(k, seed + k, n, m, d, gen_random(n, m, d, seed + k))


def gen_from_graph(vertices: int, edges: Sequence[tuple[int, int]]) -> Instance:
    """Vertex-edge incidence matrix of a simple graph (0-based vertex ids).

    A permutation reaches ``vertices - 1`` bandpasses iff the graph has a
    Hamiltonian path.
    """
    if vertices < 2:
        raise InstanceError("graph needs at least two vertices")
    if not edges:
        raise InstanceError("graph needs at least one edge to form a column")
    seen = set()
    cells = np.zeros((vertices, len(edges)), dtype=np.uint8)
    for j, (u, v) in enumerate(edges):
        if u == v:
            raise InstanceError(f"self-loop at vertex {u}")
        if not (0 <= u < vertices and 0 <= v < vertices):
            raise InstanceError(f"edge ({u}, {v}) out of range")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InstanceError(f"duplicate edge {key}")
        seen.add(key)
        cells[u, j] = cells[v, j] = 1
    return Instance(cells)


# --- text formats ---------------------------------------------------------

def format_instance(inst: Instance) -> str:
    lines = [f"{inst.n} {inst.m}"]
    lines += ["".join(str(int(b)) for b in row) for row in inst.cells]
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> Instance:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InstanceError("empty instance file")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError as exc:
        raise InstanceError(f"bad header line {lines[0]!r}") from exc
    rows = lines[1:]
    if len(rows) != n:
        raise InstanceError(f"header says {n} rows, found {len(rows)}")
    for r in rows:
        if len(r) != m or set(r) - {"0", "1"}:
            raise InstanceError(f"bad row {r!r}: expected {m} characters of 0/1")
    return Instance.from_rows(rows)


def read_instance(path: str | Path) -> Instance:
    return parse_instance(Path(path).read_text())


def write_instance(inst: Instance, path: str | Path) -> None:
    Path(path).write_text(format_instance(inst))


def format_permutation(perm: Permutation) -> str:
    return " ".join(str(i + 1) for i in perm.order) + "\n"


def parse_permutation(text: str) -> Permutation:
    try:
        order = [int(x) - 1 for x in text.split()]
    except ValueError as exc:
        raise InstanceError("permutation must be integers") from exc
    return Permutation(tuple(order))


def parse_graph(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Graph text format: ``V E`` header then ``E`` lines ``u v`` (1-based)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InstanceError("empty graph file")
    try:
        nv, ne = int(lines[0][0]), int(lines[0][1])
        edges = [(int(a) - 1, int(b) - 1) for a, b in lines[1:]]
    except (ValueError, IndexError) as exc:
        raise InstanceError("malformed graph file") from exc
    if len(edges) != ne:
        raise InstanceError(f"header says {ne} edges, found {len(edges)}")
    return nv, edges
