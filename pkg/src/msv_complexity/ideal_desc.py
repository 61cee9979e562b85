"""
Determinantal equations of MSV_w and Y_w, as descriptors.

Each essential cell ``(a, b)`` with bound ``r = rk_w(a, b)`` imposes every
``(r+1)``-minor of the south-west block rows ``a..n`` x cols ``1..b``.  The
minors are described by their row and column sets; nothing is expanded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterator

from .diagrams import bundle
from .perm_core import Cell, Permutation, rank_fn

__all__ = [
    "RankCondition",
    "MinorDescriptor",
    "DescriptorLimitError",
    "rank_conditions",
    "count_minors",
    "iter_minor_generators",
    "minor_generators",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 10**6


class DescriptorLimitError(ValueError):
    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} minor descriptors exceeds the cap of {cap}")
        self.count = count
        self.cap = cap


@dataclass(frozen=True, order=True)
class RankCondition:
    cell: Cell
    bound: int


@dataclass(frozen=True)
class MinorDescriptor:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    zero_cells: frozenset[Cell] = field(default_factory=frozenset)

    def __post_init__(self):
        if len(self.rows) != len(self.cols):
            raise ValueError("a minor needs as many rows as columns")

    @property
    def size(self) -> int:
        return len(self.rows)

    def to_json(self) -> dict:
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "size": self.size,
            "zero_cells": [list(c) for c in sorted(self.zero_cells)],
        }

    def __str__(self) -> str:
        rs = ",".join(map(str, self.rows))
        cs = ",".join(map(str, self.cols))
        out = f"det z[{{{rs}}},{{{cs}}}]"
        if self.zero_cells:
            out += " with " + ", ".join(f"z({r},{c})=0" for r, c in sorted(self.zero_cells))
        return out


def rank_conditions(w: Permutation) -> list[RankCondition]:
    """``rk_M(a, b) <= rk_w(a, b)`` for every essential cell, sorted by cell."""
    ess = bundle(w).essential
    return sorted(RankCondition(cell, rank_fn(w, *cell)) for cell in ess)


def _conditions_for(w: Permutation, for_y: bool):
    b = bundle(w)
    conds = rank_conditions(w)
    if for_y:
        # inside dom(w) every entry is already zero on Y_w
        conds = [c for c in conds if c.cell not in b.dominant]
    return conds, b


def count_minors(w: Permutation, for_y: bool = False) -> int:
    conds, _ = _conditions_for(w, for_y)
    n = w.n
    return sum(comb(n - c.cell[0] + 1, c.bound + 1) * comb(c.cell[1], c.bound + 1) for c in conds)


def iter_minor_generators(w: Permutation, for_y: bool = False) -> Iterator[MinorDescriptor]:
    """Lazily yield the descriptors, essential cell by essential cell."""
    conds, b = _conditions_for(w, for_y)
    n = w.n
    dom = b.dominant
    for cond in conds:
        a, bb = cond.cell
        k = cond.bound + 1
        for rows in combinations(range(a, n + 1), k):
            for cols in combinations(range(1, bb + 1), k):
                zeros = frozenset()
                if for_y:
                    zeros = frozenset((r, c) for r in rows for c in cols if (r, c) in dom)
                yield MinorDescriptor(rows, cols, zeros)


def minor_generators(
    w: Permutation, for_y: bool = False, cap: int = DEFAULT_CAP
) -> list[MinorDescriptor]:
    """
    All minor descriptors.  With ``for_y`` the essential cells inside the
    dominant piece are dropped and ``zero_cells`` marks the dominant-piece
    entries of each remaining minor.

    Raises :class:`DescriptorLimitError` (carrying the count) when there
    would be more than ``cap`` descriptors.
    """
    total = count_minors(w, for_y)
    if total > cap:
        raise DescriptorLimitError(total, cap)
    return list(iter_minor_generators(w, for_y))
