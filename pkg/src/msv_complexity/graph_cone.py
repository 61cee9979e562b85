"""
The bipartite graph of an L-diagram and the dimension of its weight cone.

The cone is generated by ``e_i - f_j`` for every cell ``(i, j)``.  Its
dimension is computed two ways that share no code: the vertex/component
count of the graph, and the exact integer rank of the generator matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diagrams import CellSet

__all__ = [
    "BipartiteGraph",
    "UnionFind",
    "graph_of",
    "component_count",
    "weight_generators",
    "integer_rank",
    "cone_dim_by_rank",
    "cone_dim_by_formula",
    "count_row_mask_components",
]


class UnionFind:
    """Disjoint sets over hashable keys, with path compression and union by size."""

    def __init__(self, items=()):
        self.parent = {}
        self.size = {}
        self.num_components = 0
        for x in items:
            self.add(x)

    def add(self, x):
        if x not in self.parent:
            self.parent[x] = x
            self.size[x] = 1
            self.num_components += 1

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.num_components -= 1


@dataclass(frozen=True)
class BipartiteGraph:
    """Edges ``a -> b̄`` from row vertices to (barred) column vertices."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rs, cs = set(self.rows), set(self.cols)
        for a, b in self.edges:
            if a not in rs or b not in cs:
                raise ValueError(f"edge {(a, b)} has an endpoint outside the vertex sets")
        if rs != {a for a, _ in self.edges} or cs != {b for _, b in self.edges}:
            raise ValueError("isolated vertex")

    @property
    def num_vertices(self) -> int:
        return len(self.rows) + len(self.cols)

    def to_json(self) -> dict:
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "edges": [list(e) for e in self.edges],
        }


def graph_of(cells: CellSet) -> BipartiteGraph:
    edges = tuple(cells)  # already sorted row-major
    return BipartiteGraph(
        rows=tuple(cells.occupied_rows()),
        cols=tuple(cells.occupied_cols()),
        edges=edges,
    )


def component_count(g: BipartiteGraph) -> int:
    uf = UnionFind([("r", a) for a in g.rows] + [("c", b) for b in g.cols])
    for a, b in g.edges:
        uf.union(("r", a), ("c", b))
    return uf.num_components


def count_row_mask_components(rows) -> int:
    """
    Components of the bipartite graph whose row ``i`` is adjacent to the
    columns in mask ``rows[i]``.  Rows sharing a column merge; this is the
    fast path used by the exhaustive surveys.
    """
    groups: list[int] = []
    for m in rows:
        if not m:
            continue
        merged = m
        keep = []
        for g in groups:
            if g & merged:
                merged |= g
            else:
                keep.append(g)
        keep.append(merged)
        groups = keep
    return len(groups)


def weight_generators(cells: CellSet, n: int) -> np.ndarray:
    """One row ``e_row - f_col`` in Z^{2n} per cell."""
    out = np.zeros((len(cells), 2 * n), dtype=np.int64)
    for k, (r, c) in enumerate(cells):
        out[k, r - 1] = 1
        out[k, n + c - 1] = -1
    return out


_SAFE = 1 << 31


def _bareiss_rank(a: np.ndarray) -> int | None:
    """Fraction-free elimination; returns None if int64 headroom runs out."""
    rank = 0
    prev = 1
    ncols = a.shape[1]
    for c in range(ncols):
        if a.shape[0] == 0:
            break
        nz = np.flatnonzero(a[:, c])
        if nz.size == 0:
            continue
        p = nz[0]
        if p != 0:
            a[[0, p]] = a[[p, 0]]
        pivot = a[0, c]
        rest = a[1:]
        rest = (pivot * rest - np.outer(rest[:, c], a[0])) // prev
        if a.dtype != object and rest.size and np.abs(rest).max() >= _SAFE:
            return None
        prev = pivot
        rank += 1
        # drop the pivot row and rows that became zero
        a = rest[np.any(rest != 0, axis=1)]
    return rank


def integer_rank(matrix) -> int:
    """Exact rank over Q of an integer matrix."""
    a = np.asarray(matrix)
    if a.size == 0:
        return 0
    a = a[np.any(a != 0, axis=1)].astype(np.int64)
    if a.size and np.abs(a).max() < _SAFE:
        r = _bareiss_rank(a.copy())
        if r is not None:
            return r
    return _bareiss_rank(np.asarray(matrix).astype(object))


def cone_dim_by_rank(gens) -> int:
    return integer_rank(gens)


def cone_dim_by_formula(g: BipartiteGraph) -> int:
    """|V| - |comp| for an acyclic directed graph."""
    return g.num_vertices - component_count(g)
