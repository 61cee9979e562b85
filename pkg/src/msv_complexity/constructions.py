"""
Explicit permutations with prescribed complexity.

``w0_si(n, i)`` has a single-box opposite Rothe diagram at ``(n+1-i, i)``
and complexity ``i(i-2)``.  Gluing a smaller ``beta`` into its south-west
corner (``compose_antidiagonal``) lowers the complexity by the number of
noninversions of ``beta``; ``witness`` chains these to reach any value in
``{0, 2, 3, ..., (n-1)(n-3)}``.
"""

from __future__ import annotations

from .complexity import analyze
from .diagrams import opposite_rothe
from .perm_core import (
    Permutation,
    adjacent_transposition,
    identity,
    longest_element,
    multiply,
)

__all__ = [
    "max_complexity",
    "w0_si",
    "compose_antidiagonal",
    "permutation_with_noninversions",
    "witness",
    "achievable_complexities",
]


def max_complexity(n: int) -> int:
    """(n-1)(n-3) for n >= 4; 0 below that."""
    return (n - 1) * (n - 3) if n >= 4 else 0


def achievable_complexities(n: int) -> list[int]:
    top = max_complexity(n)
    return [0] + list(range(2, top + 1))


def w0_si(n: int, i: int) -> tuple[Permutation, int]:
    """``w0 * s_i`` in S_n and its predicted complexity ``i(i-2)`` (0 for i = 1)."""
    if n < 2 or not 1 <= i <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= i <= n-1, got n={n}, i={i}")
    w = multiply(longest_element(n), adjacent_transposition(n, i))
    return w, (i * (i - 2) if i >= 2 else 0)


def compose_antidiagonal(alpha: Permutation, beta: Permutation, k: int) -> Permutation:
    """
    ``[beta_1 + k, ..., beta_m + k, alpha_{m+1}, ..., alpha_n]`` with
    ``m = n - k``.  The opposite Rothe diagram of ``alpha`` must be nonempty
    and lie in the north-east ``k x k`` block.
    """
    n, m = alpha.n, beta.n
    if m < 1 or k < 1 or m + k != n:
        raise ValueError(f"sizes do not fit: alpha in S_{n}, beta in S_{m}, k={k}")
    d = opposite_rothe(alpha)
    if not d:
        raise ValueError(f"opposite Rothe diagram of {alpha} is empty")
    for r, c in d:
        if r > k or c < n - k + 1:
            raise ValueError(f"cell {(r, c)} of D°({alpha}) is outside the north-east {k}x{k} block")
    word = tuple(x + k for x in beta.word) + alpha.word[m:]
    return Permutation(word)


def permutation_with_noninversions(m: int, t: int) -> Permutation:
    """A permutation of S_m with exactly ``t`` noninversions."""
    if not 0 <= t <= m * (m - 1) // 2:
        raise ValueError(f"S_{m} has no permutation with {t} noninversions")
    word = list(range(m, 0, -1))
    for _ in range(t):
        # swapping the first descent adds exactly one noninversion
        j = next(j for j in range(m - 1) if word[j] > word[j + 1])
        word[j], word[j + 1] = word[j + 1], word[j]
    return Permutation(tuple(word))


def _build_witness(n: int, d: int) -> Permutation:
    if d == 0:
        return identity(n)
    if d == 4 and n >= 5:
        s = n - 5
        return Permutation((s + 5, s + 4, s + 1, s + 3, s + 2) + tuple(range(s, 0, -1)))
    for i in range(3, n):
        if (i + 1) * (i - 2) // 2 <= d <= i * (i - 2):
            alpha, top = w0_si(n, i)
            beta = permutation_with_noninversions(i - 1, top - d)
            return compose_antidiagonal(alpha, beta, n + 1 - i)
    raise AssertionError(f"no construction covers d={d} in S_{n}")


def witness(n: int, d: int) -> Permutation:
    """
    Some ``w`` in S_n whose Y_w has complexity ``d``.  The result is
    re-analyzed before being returned.
    """
    if n < 4:
        raise ValueError("witness needs n >= 4")
    if d == 1:
        raise ValueError("no Y_w has complexity 1")
    top = max_complexity(n)
    if not 0 <= d <= top:
        raise ValueError(f"complexity {d} is outside 0..{top} for S_{n}")
    w = _build_witness(n, d)
    got = analyze(w).complexity
    if got != d:
        raise AssertionError(f"witness construction produced {w} with complexity {got}, not {d}")
    return w
