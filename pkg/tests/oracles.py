"""
Brute-force reference implementations, written straight from the
definitions with plain sets.  They share no code with the package.
"""

from __future__ import annotations

from fractions import Fraction

import networkx as nx


def inv_word(word):
    inv = [0] * len(word)
    for j, x in enumerate(word, start=1):
        inv[x - 1] = j
    return inv


def opposite_rothe(word):
    n = len(word)
    inv = inv_word(word)
    return {
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if word[j - 1] < i and inv[i - 1] > j
    }


def opposite_rothe_via_noninversions(word):
    n = len(word)
    return {
        (word[i - 1], j)
        for i in range(1, n + 1)
        for j in range(1, i)
        if word[j - 1] < word[i - 1]
    }


def components(cells):
    cells = set(cells)
    seen = set()
    out = []
    for start in sorted(cells):
        if start in seen:
            continue
        comp = set()
        stack = [start]
        while stack:
            c = stack.pop()
            if c in comp:
                continue
            comp.add(c)
            r, k = c
            for nb in ((r - 1, k), (r + 1, k), (r, k - 1), (r, k + 1)):
                if nb in cells and nb not in comp:
                    stack.append(nb)
        seen |= comp
        out.append(comp)
    return out


def essential(word):
    d = opposite_rothe(word)
    ess = set()
    for comp in components(d):
        for r, c in comp:
            if (r - 1, c) not in comp and (r, c + 1) not in comp:
                ess.add((r, c))
    return ess


def rank(word, a, b):
    # rank of the 0/1 submatrix rows a..n, cols 1..b, by counting dots
    return sum(1 for j in range(1, b + 1) if word[j - 1] >= a)


def dominant(word):
    n = len(word)
    d = opposite_rothe(word)
    for comp in components(d):
        if (n, 1) in comp:
            return comp
    return set()


def southwest(word):
    n = len(word)
    ess = essential(word)
    return {
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if any(i >= a and j <= b for a, b in ess)
    }


def fraction_rank(rows):
    """Rank over Q by textbook Gaussian elimination with Fractions."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def report(word):
    """Every quantity from scratch; complexity by networkx components."""
    n = len(word)
    d = opposite_rothe(word)
    dom = dominant(word)
    sw = southwest(word)
    L = sw - dom
    Lp = sw - d
    g = nx.Graph()
    g.add_edges_from(((("r", a), ("c", b)) for a, b in L))
    v = g.number_of_nodes()
    comp = nx.number_connected_components(g) if v else 0
    return {
        "card_opposite_rothe": len(d),
        "card_dominant": len(dom),
        "card_southwest": len(sw),
        "card_l": len(L),
        "card_l_prime": len(Lp),
        "vertex_count": v,
        "component_count": comp,
        "complexity": len(Lp) - (v - comp),
    }


def complexity_by_rank(word):
    """|L'| minus the rank of the weight generators, via Fraction elimination."""
    n = len(word)
    sw = southwest(word)
    L = sw - dominant(word)
    Lp = sw - opposite_rothe(word)
    gens = []
    for a, b in L:
        v = [0] * (2 * n)
        v[a - 1] = 1
        v[n + b - 1] = -1
        gens.append(v)
    return len(Lp) - fraction_rank(gens)
