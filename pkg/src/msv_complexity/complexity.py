"""
Torus-action complexity of the affine factor Y_w of a matrix Schubert variety.

``analyze`` returns every intermediate count, and computes the complexity
both as ``|L'| - dim(cone)`` and as ``|L| + |dom| - |D°| - |V| + |comp|``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass

from .diagrams import (
    _dominant_rows,
    _essential_rows,
    _opposite_rothe_rows,
    _southwest_rows,
    bundle,
)
from .graph_cone import (
    cone_dim_by_formula,
    cone_dim_by_rank,
    count_row_mask_components,
    graph_of,
    weight_generators,
)
from .perm_core import Permutation

__all__ = [
    "ComplexityReport",
    "ComplexityMismatch",
    "analyze",
    "complexity",
    "dim_msv",
    "dim_y",
    "REPORT_FIELDS",
]


class ComplexityMismatch(AssertionError):
    """Two routes to the same quantity disagreed."""


@dataclass(frozen=True)
class ComplexityReport:
    w: Permutation
    n: int
    card_opposite_rothe: int
    card_dominant: int
    card_southwest: int
    card_l: int
    card_l_prime: int
    vertex_count: int
    component_count: int
    cone_dim: int
    dim_msv: int
    dim_y: int
    length: int
    complexity: int

    @property
    def complexity_expanded(self) -> int:
        return (
            self.card_l
            + self.card_dominant
            - self.card_opposite_rothe
            - self.vertex_count
            + self.component_count
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["w"] = ",".join(map(str, self.w.word))
        return d

    def csv_row(self) -> list:
        d = self.to_dict()
        return [d[k] for k in REPORT_FIELDS]


REPORT_FIELDS = (
    "w",
    "n",
    "card_opposite_rothe",
    "card_dominant",
    "card_southwest",
    "card_l",
    "card_l_prime",
    "vertex_count",
    "component_count",
    "cone_dim",
    "dim_msv",
    "dim_y",
    "length",
    "complexity",
)


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(REPORT_FIELDS)
    for r in reports:
        writer.writerow(r.csv_row())
    return buf.getvalue()


def _counts(word: tuple[int, ...]):
    n = len(word)
    d = _opposite_rothe_rows(word)
    ess = _essential_rows(d)
    dom = _dominant_rows(d, n)
    sw = _southwest_rows(ess)
    card_d = sum(m.bit_count() for m in d)
    card_dom = sum(m.bit_count() for m in dom)
    card_sw = sum(m.bit_count() for m in sw)
    lw = [s & ~x for s, x in zip(sw, dom)]
    card_l = sum(m.bit_count() for m in lw)
    card_lp = sum((s & ~x).bit_count() for s, x in zip(sw, d))
    cols = 0
    nrows = 0
    for m in lw:
        if m:
            nrows += 1
            cols |= m
    vertices = nrows + cols.bit_count()
    comps = count_row_mask_components(lw)
    return card_d, card_dom, card_sw, card_l, card_lp, vertices, comps


def complexity(w: Permutation) -> int:
    """Complexity only; the inner loop of the exhaustive surveys."""
    card_d, card_dom, _, card_l, _, v, c = _counts(w.word)
    return card_l + card_dom - card_d - v + c


def analyze(w: Permutation, check_rank: bool = False) -> ComplexityReport:
    """
    Full report for ``w``.  With ``check_rank=True`` the cone dimension is
    also recomputed as the exact rank of the weight generators, and the
    graph components by union-find; any disagreement raises
    :class:`ComplexityMismatch`.
    """
    n = w.n
    card_d, card_dom, card_sw, card_l, card_lp, v, c = _counts(w.word)
    cone_dim = v - c
    d_main = card_lp - cone_dim
    d_expanded = card_l + card_dom - card_d - v + c
    if d_main != d_expanded:
        raise ComplexityMismatch(f"{w}: |L'|-dim = {d_main} but expanded form = {d_expanded}")

    if check_rank:
        b = bundle(w)
        g = graph_of(b.l_diagram)
        by_formula = cone_dim_by_formula(g)
        by_rank = cone_dim_by_rank(weight_generators(b.l_diagram, n))
        if not (by_formula == by_rank == cone_dim):
            raise ComplexityMismatch(
                f"{w}: cone dimension fast={cone_dim} formula={by_formula} rank={by_rank}"
            )
        if len(b.l_prime) != card_lp:
            raise ComplexityMismatch(f"{w}: |L'| = {len(b.l_prime)}, expected {card_lp}")

    return ComplexityReport(
        w=w,
        n=n,
        card_opposite_rothe=card_d,
        card_dominant=card_dom,
        card_southwest=card_sw,
        card_l=card_l,
        card_l_prime=card_lp,
        vertex_count=v,
        component_count=c,
        cone_dim=cone_dim,
        dim_msv=n * n - card_d,
        dim_y=card_lp,
        length=n * (n - 1) // 2 - card_d,
        complexity=d_main,
    )


def dim_msv(w: Permutation) -> int:
    """n^2 - |D°(w)|."""
    return w.n * w.n - sum(m.bit_count() for m in _opposite_rothe_rows(w.word))


def dim_y(w: Permutation) -> int:
    """|L'(w)| = |sw(w)| - |D°(w)|."""
    return len(bundle(w).l_prime)
