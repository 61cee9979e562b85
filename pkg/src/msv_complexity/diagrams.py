"""
Diagrams on the n x n grid attached to a permutation.

A :class:`CellSet` stores one integer bitmask per row (bit ``j - 1`` set
means column ``j`` is occupied), so membership, union and difference are a
handful of word operations per row and stay exact for any ``n``.

>>> from msv_complexity.perm_core import parse_permutation
>>> b = bundle(parse_permutation("3412"))
>>> sorted(b.opposite_rothe), len(b.southwest), len(b.l_prime)
([(2, 3), (4, 1)], 9, 7)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .perm_core import Cell, Permutation

__all__ = [
    "CellSet",
    "DiagramBundle",
    "opposite_rothe",
    "connected_components",
    "essential_set",
    "dominant_piece",
    "southwest_closure",
    "l_diagram",
    "l_prime_diagram",
    "bundle",
    "is_french_young",
]


def _low_bits(k: int) -> int:
    # columns 1..k
    return (1 << k) - 1 if k > 0 else 0


@dataclass(frozen=True)
class CellSet:
    """A set of cells of the n x n grid."""

    n: int
    rows: tuple[int, ...]  # rows[i - 1] is the column mask of row i

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("need exactly one mask per row")
        full = _low_bits(self.n)
        for m in self.rows:
            if m < 0 or m & ~full:
                raise ValueError("cell outside the grid")

    @classmethod
    def empty(cls, n: int) -> CellSet:
        return cls(n, (0,) * n)

    @classmethod
    def from_cells(cls, n: int, cells: Iterable[Cell]) -> CellSet:
        rows = [0] * n
        for r, c in cells:
            if not (1 <= r <= n and 1 <= c <= n):
                raise ValueError(f"cell {(r, c)} outside the {n}x{n} grid")
            rows[r - 1] |= 1 << (c - 1)
        return cls(n, tuple(rows))

    def __len__(self) -> int:
        return sum(m.bit_count() for m in self.rows)

    def __bool__(self) -> bool:
        return any(self.rows)

    def __contains__(self, cell) -> bool:
        r, c = cell
        if not (1 <= r <= self.n and 1 <= c <= self.n):
            return False
        return bool(self.rows[r - 1] >> (c - 1) & 1)

    def __iter__(self) -> Iterator[Cell]:
        for r, m in enumerate(self.rows, start=1):
            c = 1
            while m:
                if m & 1:
                    yield (r, c)
                m >>= 1
                c += 1

    def _check(self, other: CellSet):
        if self.n != other.n:
            raise ValueError(f"grid size mismatch: {self.n} vs {other.n}")

    def __or__(self, other: CellSet) -> CellSet:
        self._check(other)
        return CellSet(self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def __and__(self, other: CellSet) -> CellSet:
        self._check(other)
        return CellSet(self.n, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def __sub__(self, other: CellSet) -> CellSet:
        self._check(other)
        return CellSet(self.n, tuple(a & ~b for a, b in zip(self.rows, other.rows)))

    def issubset(self, other: CellSet) -> bool:
        self._check(other)
        return all(not (a & ~b) for a, b in zip(self.rows, other.rows))

    __le__ = issubset

    def row_counts(self) -> list[int]:
        return [m.bit_count() for m in self.rows]

    def column_mask(self) -> int:
        out = 0
        for m in self.rows:
            out |= m
        return out

    def occupied_rows(self) -> list[int]:
        return [r for r, m in enumerate(self.rows, start=1) if m]

    def occupied_cols(self) -> list[int]:
        cm = self.column_mask()
        return [c for c in range(1, self.n + 1) if cm >> (c - 1) & 1]

    def cells(self) -> list[Cell]:
        return list(self)

    def to_json(self) -> list[list[int]]:
        return [[r, c] for r, c in self]

    def __repr__(self) -> str:
        return f"CellSet(n={self.n}, {self.cells()})"


def _fill_component(rows: list[int], n: int, seed: list[int]) -> list[int]:
    """Grow ``seed`` to its edge-connected component inside ``rows``."""
    comp = seed[:]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            m = rows[i]
            if not m:
                continue
            x = comp[i]
            if i > 0:
                x |= comp[i - 1] & m
            if i + 1 < n:
                x |= comp[i + 1] & m
            while True:
                y = (x | (x << 1) | (x >> 1)) & m
                if y == x:
                    break
                x = y
            if x != comp[i]:
                comp[i] = x
                changed = True
    return comp


def _opposite_rothe_rows(word: tuple[int, ...]) -> list[int]:
    n = len(word)
    inv = [0] * (n + 1)
    for j, x in enumerate(word, start=1):
        inv[x] = j
    rows = [0] * n
    below = 0  # columns j with w(j) < i
    for i in range(1, n + 1):
        rows[i - 1] = below & _low_bits(inv[i] - 1)
        below |= 1 << (inv[i] - 1)
    return rows


def opposite_rothe(w: Permutation) -> CellSet:
    """Cells ``(i, j)`` with ``w(j) < i`` and ``w^{-1}(i) > j``."""
    return CellSet(w.n, tuple(_opposite_rothe_rows(w.word)))


def connected_components(cells: CellSet) -> list[CellSet]:
    """Edge-connected components, ordered by their south-west-most cell."""
    n = cells.n
    remaining = list(cells.rows)
    comps = []
    while any(remaining):
        i = next(k for k in range(n) if remaining[k])
        m = remaining[i]
        seed = [0] * n
        seed[i] = m & -m
        comp = _fill_component(remaining, n, seed)
        remaining = [a & ~b for a, b in zip(remaining, comp)]
        comps.append(CellSet(n, tuple(comp)))

    def sw_key(c: CellSet):
        return min((-r, col) for r, col in c)

    comps.sort(key=sw_key)
    return comps


def _essential_rows(d: list[int]) -> list[int]:
    out = []
    prev = 0
    for m in d:
        # not in D above and not in D to the east
        out.append(m & ~prev & ~(m >> 1))
        prev = m
    return out


def essential_set(w: Permutation) -> CellSet:
    """North-east corners of the components of the opposite Rothe diagram."""
    return CellSet(w.n, tuple(_essential_rows(_opposite_rothe_rows(w.word))))


def _dominant_rows(d: list[int], n: int) -> list[int]:
    if not d[n - 1] & 1:
        return [0] * n
    seed = [0] * n
    seed[n - 1] = 1
    return _fill_component(d, n, seed)


def dominant_piece(w: Permutation) -> CellSet:
    """Component of ``(n, 1)`` in the opposite Rothe diagram, or empty."""
    n = w.n
    return CellSet(n, tuple(_dominant_rows(_opposite_rothe_rows(w.word), n)))


def _southwest_rows(ess: list[int]) -> list[int]:
    out = []
    reach = 0
    for m in ess:
        reach |= m
        out.append(_low_bits(reach.bit_length()))
    return out


def southwest_closure(w: Permutation) -> CellSet:
    """Cells weakly south-west of some essential cell."""
    d = _opposite_rothe_rows(w.word)
    return CellSet(w.n, tuple(_southwest_rows(_essential_rows(d))))


def l_diagram(w: Permutation) -> CellSet:
    return bundle(w).l_diagram


def l_prime_diagram(w: Permutation) -> CellSet:
    return bundle(w).l_prime


@dataclass(frozen=True)
class DiagramBundle:
    w: Permutation
    opposite_rothe: CellSet
    essential: CellSet
    dominant: CellSet
    southwest: CellSet
    l_diagram: CellSet
    l_prime: CellSet

    def as_dict(self) -> dict[str, list[list[int]]]:
        return {
            "opposite_rothe": self.opposite_rothe.to_json(),
            "essential": self.essential.to_json(),
            "dominant": self.dominant.to_json(),
            "southwest": self.southwest.to_json(),
            "l": self.l_diagram.to_json(),
            "l_prime": self.l_prime.to_json(),
        }


def bundle(w: Permutation) -> DiagramBundle:
    n = w.n
    d = _opposite_rothe_rows(w.word)
    ess = _essential_rows(d)
    dom = _dominant_rows(d, n)
    sw = _southwest_rows(ess)
    lw = [s & ~x for s, x in zip(sw, dom)]
    lp = [s & ~x for s, x in zip(sw, d)]
    return DiagramBundle(
        w=w,
        opposite_rothe=CellSet(n, tuple(d)),
        essential=CellSet(n, tuple(ess)),
        dominant=CellSet(n, tuple(dom)),
        southwest=CellSet(n, tuple(sw)),
        l_diagram=CellSet(n, tuple(lw)),
        l_prime=CellSet(n, tuple(lp)),
    )


def is_french_young(cells: CellSet) -> bool:
    """
    True iff the cells form a Young diagram in French notation: rows are
    left-justified against a common west edge, there are no empty rows
    inside the bounding box, and row lengths weakly shrink going north.
    """
    occupied = [(r, m) for r, m in enumerate(cells.rows, start=1) if m]
    if not occupied:
        return True
    top, bottom = occupied[0][0], occupied[-1][0]
    if len(occupied) != bottom - top + 1:
        return False
    west = min((m & -m).bit_length() for _, m in occupied)
    prev_len = None
    for _, m in reversed(occupied):  # south to north
        length = m.bit_count()
        if m != _low_bits(length) << (west - 1):
            return False
        if prev_len is not None and length > prev_len:
            return False
        prev_len = length
    return True
