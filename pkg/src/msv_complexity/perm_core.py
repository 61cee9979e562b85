"""
Permutations of ``[n] = {1, ..., n}`` in one-line notation.

Everything here is 1-indexed, matching matrix coordinates: the dot of
column ``j`` sits in row ``w(j)``.

>>> w = parse_permutation("3412")
>>> w.word, w.n
((3, 4, 1, 2), 4)
>>> rank_fn(w, 2, 3)
2
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "Cell",
    "Permutation",
    "from_one_line",
    "parse_permutation",
    "identity",
    "longest_element",
    "adjacent_transposition",
    "multiply",
    "inverse",
    "noninversions",
    "coxeter_length",
    "rank_fn",
    "dots",
]

# (row, col) in matrix coordinates; row 1 is north, col 1 is west
Cell = tuple[int, int]


@dataclass(frozen=True, order=True)
class Permutation:
    """An element of S_n stored as its one-line word ``(w(1), ..., w(n))``."""

    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if n == 0:
            raise ValueError("a permutation needs at least one letter")
        seen = set()
        for x in word:
            if not 1 <= x <= n:
                raise ValueError(f"value {x} out of range 1..{n}")
            if x in seen:
                raise ValueError(f"repeated value {x}")
            seen.add(x)

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __mul__(self, other: Permutation) -> Permutation:
        return multiply(self, other)

    def one_line(self) -> str:
        """Compact word for n < 10 (``3412``), comma separated otherwise."""
        if self.n < 10:
            return "".join(map(str, self.word))
        return ",".join(map(str, self.word))

    def __str__(self) -> str:
        return self.one_line()

    def __repr__(self) -> str:
        return f"Permutation({self.one_line()})"


def from_one_line(word: Iterable[int]) -> Permutation:
    return Permutation(tuple(word))


def parse_permutation(text: str) -> Permutation:
    """Parse ``"3,4,1,2"``, ``"[3, 4, 1, 2]"`` or the compact ``"3412"`` (n < 10)."""
    s = text.strip().strip("[]()").strip()
    if not s:
        raise ValueError("empty permutation text")
    if "," in s or " " in s:
        parts = [p for p in s.replace(",", " ").split() if p]
        try:
            word = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"cannot parse permutation {text!r}") from None
    else:
        if not s.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        word = [int(c) for c in s]
        if len(word) >= 10:
            raise ValueError("compact notation only allowed for n < 10; use commas")
    return Permutation(tuple(word))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest_element(n: int) -> Permutation:
    """w0 = [n, n-1, ..., 1]."""
    if n < 1:
        raise ValueError("n must be positive")
    return Permutation(tuple(range(n, 0, -1)))


def adjacent_transposition(n: int, i: int) -> Permutation:
    """s_i in S_n, swapping i and i+1."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"s_{i} is not defined in S_{n}")
    word = list(range(1, n + 1))
    word[i - 1], word[i] = word[i], word[i - 1]
    return Permutation(tuple(word))


def multiply(u: Permutation, v: Permutation) -> Permutation:
    """Composition ``(u*v)(i) = u(v(i))``."""
    if u.n != v.n:
        raise ValueError(f"size mismatch: S_{u.n} vs S_{v.n}")
    uw = u.word
    return Permutation(tuple(uw[x - 1] for x in v.word))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for j, x in enumerate(w.word, start=1):
        inv[x - 1] = j
    return Permutation(tuple(inv))


def noninversions(w: Permutation) -> set[tuple[int, int]]:
    """Pairs ``i < j`` with ``w(i) < w(j)``."""
    word = w.word
    n = len(word)
    return {
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if word[i] < word[j]
    }


def coxeter_length(w: Permutation) -> int:
    """Number of inversions."""
    word = w.word
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def rank_fn(w: Permutation, a: int, b: int) -> int:
    """Rank of the permutation matrix restricted to rows a..n, columns 1..b."""
    n = w.n
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError(f"({a}, {b}) outside the {n}x{n} grid")
    return sum(1 for x in w.word[:b] if x >= a)


def dots(w: Permutation):
    """The cells ``(w(j), j)`` as a :class:`~msv_complexity.diagrams.CellSet`."""
    from .diagrams import CellSet

    return CellSet.from_cells(w.n, ((x, j) for j, x in enumerate(w.word, start=1)))
